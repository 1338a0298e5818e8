"""Sentence selection and paraphrasing.

Two providers implement the same contract: a remote HTTP client (endpoint and
key from the environment) and a deterministic rule-based fallback driven by a
shipped phrase table. Whatever the provider does, clinically load-bearing
tokens must survive: negations and laterality words verbatim, term-map terms
verbatim or via a term-map-sanctioned equivalent. A violating paraphrase is
discarded (original kept, event logged), never raised to the caller.
"""

from __future__ import annotations

import json
import logging
import os
import re
from importlib import resources
from pathlib import Path
from typing import Protocol

import requests

from ..corpus.reports import PatientReport
from ..errors import InvalidFractions, MalformedCatalog, ProviderUnavailable
from ..jsonutil import read_json
from ..rng import derive_rng
from .terms import TermMap

logger = logging.getLogger(__name__)

NEGATION_WORDS = frozenset(
    {
        "no",
        "not",
        "never",
        "none",
        "nothing",
        "don't",
        "doesn't",
        "didn't",
        "won't",
        "can't",
        "cannot",
        "without",
        "deny",
        "denies",
        "denied",
        "neither",
        "nor",
    }
)

LATERALITY_WORDS = frozenset({"left", "right"})

ENDPOINT_ENV = "DDXKIT_PARAPHRASE_ENDPOINT"
API_KEY_ENV = "DDXKIT_PARAPHRASE_API_KEY"


def _words(sentence: str) -> set[str]:
    return set(re.findall(r"[a-z0-9']+", sentence.lower()))


def protected_tokens(sentence: str, term_map: TermMap | None = None) -> set[str]:
    """Tokens of a sentence that a paraphrase is not allowed to lose."""
    words = _words(sentence)
    protected = (words & NEGATION_WORDS) | (words & LATERALITY_WORDS)
    if term_map is not None:
        protected |= term_map.find_terms(sentence)
    return protected


def check_contract(
    original: str, paraphrased: str, term_map: TermMap | None = None
) -> list[str]:
    """Return the protected tokens of ``original`` that ``paraphrased`` lost."""
    out_words = _words(paraphrased)
    lost: list[str] = []
    for token in sorted(protected_tokens(original, term_map)):
        if term_map is not None and token in term_map.all_terms:
            survivors = term_map.equivalence_class(token)
            if not any(term_map.contains_term(paraphrased, t) for t in survivors):
                lost.append(token)
        elif token not in out_words:
            lost.append(token)
    return lost


class Paraphraser(Protocol):
    name: str

    def paraphrase(self, sentence: str) -> str: ...


def load_phrase_table(path: str | Path | None = None) -> dict:
    if path is None:
        with resources.files("ddxkit.data").joinpath("phrase_table.json").open() as fh:
            table = json.load(fh)
    else:
        table = read_json(path)
    if "synonyms" not in table or "rewrites" not in table:
        raise MalformedCatalog("phrase table needs 'synonyms' and 'rewrites' sections")
    return table


class RuleBasedParaphraser:
    """Seeded synonym substitution plus clause-order rewrites.

    Pure function of (sentence, seed): the random stream is derived from the
    sentence text itself, so repeated and parallel runs agree.
    """

    name = "fallback"

    def __init__(self, phrase_table: dict | None = None, seed: int = 0):
        self.table = phrase_table if phrase_table is not None else load_phrase_table()
        self.seed = seed
        synonyms = self.table["synonyms"]
        ordered = sorted(synonyms, key=lambda p: (-len(p), p))
        self._syn_pattern = re.compile(
            r"(?<![a-z0-9])(?:" + "|".join(re.escape(p) for p in ordered) + r")(?![a-z0-9])",
            re.IGNORECASE,
        )
        self._rewrites = [
            (re.compile(rw["pattern"], re.IGNORECASE), rw["template"])
            for rw in self.table["rewrites"]
        ]

    def paraphrase(self, sentence: str) -> str:
        rng = derive_rng(self.seed, "paraphrase", sentence)
        synonyms = self.table["synonyms"]

        def _swap(match: re.Match) -> str:
            options = synonyms[match.group(0).lower()]
            return options[int(rng.integers(len(options)))]

        out = self._syn_pattern.sub(_swap, sentence)

        applicable = [(p, t) for p, t in self._rewrites if p.match(out)]
        if applicable:
            # one extra slot leaves the clause order unchanged
            pick = int(rng.integers(len(applicable) + 1))
            if pick < len(applicable):
                pattern, template = applicable[pick]
                m = pattern.match(out)
                out = template.format(*m.groups())
        return _recase(out)


def _recase(sentence: str) -> str:
    sentence = re.sub(
        r"(^|(?<=[.!?] ))([a-z])", lambda m: m.group(1) + m.group(2).upper(), sentence
    )
    return re.sub(r"(?<![a-z0-9])i(?=['’ ]|$)", "I", sentence)


class RemoteParaphraser:
    """HTTP provider: POST {"sentence": ...} -> {"paraphrase": ...}."""

    name = "remote"

    def __init__(
        self,
        endpoint: str | None = None,
        api_key: str | None = None,
        timeout: float = 30.0,
    ):
        self.endpoint = endpoint or os.environ.get(ENDPOINT_ENV)
        self.api_key = api_key or os.environ.get(API_KEY_ENV)
        self.timeout = timeout
        if not self.endpoint:
            raise ProviderUnavailable(
                f"no paraphrase endpoint configured (set {ENDPOINT_ENV})"
            )

    def paraphrase(self, sentence: str) -> str:
        headers = {"Content-Type": "application/json"}
        if self.api_key:
            headers["Authorization"] = f"Bearer {self.api_key}"
        try:
            resp = requests.post(
                self.endpoint,
                json={"sentence": sentence},
                headers=headers,
                timeout=self.timeout,
            )
            resp.raise_for_status()
            out = resp.json()["paraphrase"]
        except (requests.RequestException, KeyError, ValueError) as exc:
            raise ProviderUnavailable(f"paraphrase provider failed: {exc}") from exc
        if not isinstance(out, str) or not out:
            raise ProviderUnavailable("paraphrase provider returned an empty result")
        return out


def paraphrase_sentence(
    sentence: str, provider: Paraphraser, term_map: TermMap | None = None
) -> str:
    """Paraphrase one sentence, enforcing the protected-token contract.

    A paraphrase that loses a protected token is discarded: the original
    sentence is returned and the event logged.
    """
    if not sentence:
        raise InvalidFractions("cannot paraphrase an empty sentence")
    out = provider.paraphrase(sentence)
    if not out:
        return sentence
    lost = check_contract(sentence, out, term_map)
    if lost:
        logger.warning(
            "paraphrase dropped protected tokens %s; keeping original %r", lost, sentence
        )
        return sentence
    return out


def select_sentences(report: PatientReport, fraction: float, seed: int) -> set[int]:
    """Pick the pooled sentence indices to paraphrase.

    k = max(1, floor(fraction * N)) so short reports still get one paraphrase;
    an empty report yields the empty set.
    """
    if not 0.0 < fraction <= 1.0:
        raise InvalidFractions(f"sentence fraction {fraction} outside (0, 1]")
    n = len(report.sentences)
    if n == 0:
        return set()
    k = max(1, int(fraction * n))
    rng = derive_rng(seed, "sp-select", report.id)
    return {int(i) for i in rng.choice(n, size=k, replace=False)}
