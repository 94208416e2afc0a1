"""Assemble command results into reports and render them as text or JSON.

JSON output is ``json.dumps(..., sort_keys=True, indent=2)``, so the same
inputs always give byte-identical output. Element sets are listed in
canonical element order.
"""

import dataclasses
import json
from collections.abc import Sequence
from dataclasses import dataclass
from dataclasses import field
from typing import Any

from .amalgam import AmalgamRing
from .classify import element_class
from .classify import jacobson_radical
from .classify import ring_flags
from .decomp import ALL_SCHEMES
from .decomp import DecompScheme
from .decomp import iter_decompositions
from .decomp import property_report
from .decomp import scheme_holds
from .ring import FiniteRing
from .suite import SuiteResult
from .types import CheckStatus
from .types import ElementKind
from .types import ExitCode
from .types import OutputFormat
from .types import Scheme
from .worked_examples import ExampleReport


@dataclass(frozen=True)
class Report:
    """A rendered-on-demand command result."""

    title: str
    payload: dict[str, Any]
    lines: tuple[str, ...] = ()
    exit_code: ExitCode = ExitCode.OK

    def render(self, fmt: OutputFormat = OutputFormat.TEXT) -> str:
        return render(self, fmt)


def render(report: Report, fmt: OutputFormat = OutputFormat.TEXT) -> str:
    if fmt is OutputFormat.JSON:
        return json.dumps(report.payload, sort_keys=True, indent=2) + "\n"
    return "\n".join((report.title, *report.lines)) + "\n"


@dataclass
class _Text:
    lines: list[str] = field(default_factory=list)

    def section(self, heading: str, items: Sequence[str]) -> None:
        self.lines.append("")
        self.lines.append(f"{heading} ({len(items)}):")
        self.lines.append("  " + (", ".join(items) if items else "(none)"))

    def table(self, rows: dict[str, Any]) -> None:
        width = max((len(k) for k in rows), default=0)
        self.lines.extend(f"  {k.ljust(width)}  {v}" for k, v in rows.items())


def _ring_header(ring: FiniteRing) -> dict[str, Any]:
    return {
        "ring": ring.describe(),
        "order": ring.order,
        "characteristic": ring.characteristic,
        "commutative": ring.is_commutative,
    }


def build_report(ring: FiniteRing) -> Report:
    payload = {**_ring_header(ring), "elements": list(ring.labels)}
    text = _Text()
    text.table({k: v for k, v in payload.items() if k != "elements"})
    text.section("Elements", list(ring.labels))
    return Report(f"Ring {ring.describe()}", payload, tuple(text.lines))


def classify_report(ring: FiniteRing) -> Report:
    """Element classes, the radical, flags and every scheme verdict."""
    classes = {
        kind: element_class(ring, kind).labels for kind in ElementKind
    }
    radical = jacobson_radical(ring).labels
    flags = dataclasses.asdict(ring_flags(ring))
    properties = property_report(ring)
    schemes = {
        str(scheme): properties.verdicts[scheme].as_data()
        for scheme in ALL_SCHEMES
    }
    payload: dict[str, Any] = {
        **_ring_header(ring),
        "idempotents": classes[ElementKind.IDEMPOTENT],
        "tripotents": classes[ElementKind.TRIPOTENT],
        "nilpotents": classes[ElementKind.NILPOTENT],
        "units": classes[ElementKind.UNIT],
        "radical": radical,
        "flags": flags,
        "uniquely_sit": properties.uniquely_sit,
        "uniquely_sitt": properties.uniquely_sitt,
        "schemes": schemes,
    }
    text = _Text()
    text.section("Idempotents", classes[ElementKind.IDEMPOTENT])
    text.section("Tripotents", classes[ElementKind.TRIPOTENT])
    text.section("Nilpotents", classes[ElementKind.NILPOTENT])
    text.section("Units", classes[ElementKind.UNIT])
    text.section("Jacobson radical", radical)
    text.lines.extend(["", "Flags:"])
    text.table(flags)
    text.lines.extend(["", "Schemes:"])
    text.table(
        {
            name: (
                "holds"
                if data["holds"]
                else f"fails at {data['counterexample']}"
            )
            for name, data in schemes.items()
        }
    )
    return Report(
        f"Classification of {ring.describe()}", payload, tuple(text.lines)
    )


def decompose_report(
    ring: FiniteRing, scheme: Scheme, *, strong: bool, element: str | None
) -> Report:
    """Decompositions of one element, or a witness map for the ring.

    The exit code is non-zero when the element (or some element) has no
    decomposition.
    """
    decomp = DecompScheme(scheme, strong)
    text = _Text()
    if element is not None:
        found = list(iter_decompositions(ring, ring.index(element), decomp))
        payload: dict[str, Any] = {
            "ring": ring.describe(),
            "scheme": str(decomp),
            "element": element,
            "decompositions": [d.as_data(ring) for d in found],
        }
        text.lines.extend(f"  {d.describe(ring)}" for d in found)
        if not found:
            text.lines.append("  no decomposition")
        return Report(
            f"{decomp} decompositions of {element} in {ring.describe()}",
            payload,
            tuple(text.lines),
            ExitCode.OK if found else ExitCode.PROPERTY_FALSE,
        )
    verdict = scheme_holds(ring, decomp)
    witnesses = verdict.witnesses
    payload = {
        "ring": ring.describe(),
        **verdict.as_data(),
        "witnesses": [
            witnesses[a].as_data(ring) for a in sorted(witnesses)
        ],
    }
    failures = ring.labels_of(verdict.failures)
    text.lines.append(f"  fails at {failures[0]}" if failures else "  holds")
    text.lines.extend(
        f"  {witnesses[a].describe(ring)}" for a in sorted(witnesses)
    )
    if failures:
        text.section("Failures", failures)
    return Report(
        f"{decomp} in {ring.describe()}",
        payload,
        tuple(text.lines),
        ExitCode.OK if verdict.holds else ExitCode.PROPERTY_FALSE,
    )


def amalgamate_report(amalgam: AmalgamRing) -> Report:
    ring = amalgam.ring
    idempotents = element_class(ring, ElementKind.IDEMPOTENT).labels
    tripotents = element_class(ring, ElementKind.TRIPOTENT).labels
    payload: dict[str, Any] = {
        "kind": str(amalgam.kind),
        "amalgam": amalgam.describe(),
        "order": ring.order,
        "expected_order": amalgam.expected_order(),
        "order_formula_holds": amalgam.order_formula_holds(),
        "image_f": list(amalgam.image_f.labels),
        "elements": list(ring.labels),
        "idempotents": idempotents,
        "tripotents": tripotents,
        "sit": scheme_holds(ring, DecompScheme(Scheme.SIT)).holds,
        "sitt": scheme_holds(ring, DecompScheme(Scheme.SITT)).holds,
    }
    if amalgam.image_g is not None:
        payload["image_g"] = list(amalgam.image_g.labels)
    text = _Text()
    text.table(
        {
            "order": f"{ring.order} (expected {amalgam.expected_order()})",
            "SIT": payload["sit"],
            "SITT": payload["sitt"],
        }
    )
    text.section("f(A)+J", payload["image_f"])
    if "image_g" in payload:
        text.section("g(A)+J'", payload["image_g"])
    text.section("Elements", payload["elements"])
    text.section("Idempotents", idempotents)
    text.section("Tripotents", tripotents)
    return Report(
        f"Amalgam {amalgam.describe()}",
        payload,
        tuple(text.lines),
        ExitCode.OK
        if amalgam.order_formula_holds()
        else ExitCode.PROPERTY_FALSE,
    )


def verify_report(result: SuiteResult) -> Report:
    text = _Text()
    for verdict in result.verdicts:
        marker = " (expected)" if verdict.expected_divergence else ""
        text.lines.append(
            f"  {verdict.theorem:<6} {verdict.status:<16}"
            f" {verdict.subject}{marker}"
        )
        for direction in verdict.failed_directions:
            text.lines.append(f"           failing direction: {direction}")
    text.lines.append("")
    text.table({**result.summary, "unexpected": len(result.unexpected)})
    return Report(
        "Theorem suite",
        dict(result.as_data()),
        tuple(text.lines),
        ExitCode.OK if result.ok else ExitCode.PROPERTY_FALSE,
    )


def examples_report(reports: Sequence[ExampleReport]) -> Report:
    text = _Text()
    unexpected = 0
    for report in reports:
        text.lines.append(f"Example {report.example}: {report.title}")
        for check in report.checks:
            status = str(check.status)
            if check.status is CheckStatus.DIVERGENCE:
                status += " (expected)" if check.expected_divergence else ""
            text.lines.append(
                f"  {status:<22} {check.check}: {check.description}"
            )
            if check.missing:
                text.lines.append(f"      missing: {', '.join(check.missing)}")
            if check.extra:
                text.lines.append(f"      extra: {', '.join(check.extra)}")
            if check.status is CheckStatus.DIVERGENCE and not check.is_set:
                text.lines.append(
                    f"      claimed {check.claimed!r},"
                    f" computed {check.computed!r}"
                )
        unexpected += len(report.unexpected)
    payload = {
        "examples": [r.as_data() for r in reports],
        "unexpected": unexpected,
    }
    return Report(
        "Worked examples",
        payload,
        tuple(text.lines),
        ExitCode.OK if not unexpected else ExitCode.PROPERTY_FALSE,
    )
