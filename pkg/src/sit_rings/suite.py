"""Run the theorem catalogue over a corpus."""

import contextvars
import logging
from collections import Counter
from collections.abc import Iterable
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .corpus import CorpusEntry
from .exceptions import UnknownTheorem
from .theorems import CATALOGUE
from .theorems import TheoremVerdict
from .theorems import run_check
from .types import SuiteData
from .types import VerdictStatus


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SuiteResult:
    """Verdicts in (corpus order, catalogue order)."""

    verdicts: tuple[TheoremVerdict, ...]

    @property
    def summary(self) -> dict[str, int]:
        counts = Counter(v.status for v in self.verdicts)
        return {str(status): counts[status] for status in VerdictStatus}

    @property
    def counterexamples(self) -> list[TheoremVerdict]:
        return [
            v
            for v in self.verdicts
            if v.status is VerdictStatus.COUNTEREXAMPLE
        ]

    @property
    def unexpected(self) -> list[TheoremVerdict]:
        """Counterexamples not covered by the divergence list."""
        return [v for v in self.counterexamples if not v.expected_divergence]

    @property
    def ok(self) -> bool:
        return not self.unexpected

    def as_data(self) -> SuiteData:
        return {
            "summary": self.summary,
            "unexpected": len(self.unexpected),
            "verdicts": [v.as_data() for v in self.verdicts],
        }


def resolve_theorems(theorems: Iterable[str] | None) -> list[str]:
    """Expand ``None`` or ``["all"]`` to the whole catalogue.

    :raises UnknownTheorem: If an id is not registered.
    """
    if theorems is None:
        return list(CATALOGUE)
    ids = list(theorems)
    if ids == ["all"]:
        return list(CATALOGUE)
    unknown = [t for t in ids if t not in CATALOGUE]
    if unknown:
        raise UnknownTheorem(
            f"unknown theorem ids: {', '.join(unknown)}",
            context={"unknown": unknown, "known": list(CATALOGUE)},
        )
    return ids


def _pairs(
    corpus: Sequence[CorpusEntry], theorems: list[str]
) -> list[tuple[str, CorpusEntry]]:
    return [
        (theorem, entry)
        for entry in corpus
        for theorem in theorems
        if entry.kind in CATALOGUE[theorem].kinds
    ]


def run_suite(
    corpus: Sequence[CorpusEntry],
    theorems: Iterable[str] | None = None,
    *,
    max_workers: int | None = None,
) -> SuiteResult:
    """Check every applicable (theorem, subject) pair.

    Pairs whose subject kind does not match the checker are skipped. With
    ``max_workers > 1`` checks run on a thread pool; each task sees the
    caps active in the calling thread.

    :param corpus: Subjects, usually from :func:`generate_corpus`.
    :param theorems: Catalogue ids; ``None`` means all.
    :param max_workers: Thread count; ``None`` or ``1`` runs serially.
    """
    pairs = _pairs(corpus, resolve_theorems(theorems))
    logger.debug(
        "Running %d checks over %d subjects", len(pairs), len(corpus)
    )
    if max_workers is None or max_workers <= 1:
        verdicts = [
            run_check(theorem, entry.subject, name=entry.name)
            for theorem, entry in pairs
        ]
    else:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            futures = [
                pool.submit(
                    contextvars.copy_context().run,
                    run_check,
                    theorem,
                    entry.subject,
                    name=entry.name,
                )
                for theorem, entry in pairs
            ]
            verdicts = [future.result() for future in futures]
    result = SuiteResult(tuple(verdicts))
    logger.info(
        "Suite finished: %s, %d unexpected",
        ", ".join(f"{k}={v}" for k, v in result.summary.items()),
        len(result.unexpected),
    )
    return result
