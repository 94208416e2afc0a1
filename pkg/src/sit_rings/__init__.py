"""Finite rings as Cayley tables: SIT, weakly SIT and SITT decompositions,
amalgamations along ideals, and executable checks of their theory."""

__version__ = "0.1.0a1"

__all__ = [
    "AmalgamRing",
    "Caps",
    "FiniteRing",
    "Scheme",
    "build",
    "generate_corpus",
    "paper_example_report",
    "property_report",
    "run_check",
    "run_suite",
]

# Heavy modules (numpy tables, the checker catalogue) load on first use.
_EXPORTS = {
    "AmalgamRing": "sit_rings.amalgam",
    "Caps": "sit_rings.config",
    "FiniteRing": "sit_rings.ring",
    "Scheme": "sit_rings.types",
    "build": "sit_rings.constructions",
    "generate_corpus": "sit_rings.corpus",
    "paper_example_report": "sit_rings.worked_examples",
    "property_report": "sit_rings.decomp",
    "run_check": "sit_rings.theorems",
    "run_suite": "sit_rings.suite",
}


def __getattr__(name: str):
    if name in _EXPORTS:
        from importlib import import_module

        return getattr(import_module(_EXPORTS[name]), name)
    msg = f"module {__name__!r} has no attribute {name!r}"
    raise AttributeError(msg)
