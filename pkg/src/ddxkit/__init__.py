"""ddxkit: differential-diagnosis corpus, model, and evaluation toolkit."""

__version__ = "0.1.0"

N_DDXPLUS_EVIDENCES = 223
N_DDXPLUS_CONDITIONS = 49
