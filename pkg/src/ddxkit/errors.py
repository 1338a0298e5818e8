"""Exception types raised across the toolkit.

Every error carries enough context (file, row, code, ...) in its message to be
actionable from a CLI run; none of them wrap or hide the original cause.
"""


class DdxkitError(Exception):
    """Base class for all ddxkit errors."""


# --- catalog / patient ingestion ---------------------------------------------


class MissingFile(DdxkitError):
    pass


class MalformedCatalog(DdxkitError):
    pass


class DuplicateCode(DdxkitError):
    pass


class UnknownEvidenceCode(DdxkitError):
    pass


class ValueOutOfDomain(DdxkitError):
    pass


class EmptyDifferential(DdxkitError):
    pass


class NoTemplateMatch(DdxkitError):
    def __init__(self, evidence_code: str, value: str):
        self.evidence_code = evidence_code
        self.value = value
        super().__init__(
            f"no response template matches evidence {evidence_code!r} with value {value!r}"
        )


# --- augmentation -------------------------------------------------------------


class InvalidFractions(DdxkitError):
    pass


class ProviderUnavailable(DdxkitError):
    pass


class ContractViolation(DdxkitError):
    """A paraphrase dropped a protected token. Callers keep the original sentence."""

    def __init__(self, sentence: str, lost_tokens: list[str]):
        self.sentence = sentence
        self.lost_tokens = lost_tokens
        super().__init__(f"paraphrase lost protected tokens {lost_tokens!r} in {sentence!r}")


# --- behavioral generators ----------------------------------------------------


class IneligibleWord(DdxkitError):
    pass


class MalformedSample(DdxkitError):
    pass


class UnknownCondition(DdxkitError):
    pass


# --- model / evaluation -------------------------------------------------------


class ShapeMismatch(DdxkitError):
    pass


class EmptyCorpus(DdxkitError):
    pass


class UnknownSampleId(DdxkitError):
    pass


class LengthMismatch(DdxkitError):
    pass


class ValueOutOfRange(DdxkitError):
    pass


class IndexOutOfRange(DdxkitError):
    pass


class JoinFailure(DdxkitError):
    pass


# --- pipeline -----------------------------------------------------------------


class StageFailure(DdxkitError):
    def __init__(self, stage: str, cause: Exception):
        self.stage = stage
        self.cause = cause
        super().__init__(f"pipeline stage {stage!r} failed: {cause}")
