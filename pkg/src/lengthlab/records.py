"""Series records shared by the algebra and invariant modules."""

from __future__ import annotations

from dataclasses import dataclass, field

from .group import PermGroup

SOLUBLE = "soluble"
SEMISIMPLE = "semisimple"
NILPOTENT = "nilpotent"
UNCLASSIFIED = "unclassified"

KINDS = ("fitting", "generalized-fitting", "nonsoluble-upper", "derived", "lower-central", "chief",
         "certificate")


@dataclass
class SeriesRecord:
    """A chain of subgroups of ``parent`` with one tag per step.

    ``terms[i] -> terms[i + 1]`` carries ``factor_tags[i]``. Ascending kinds
    start at the trivial group (or the supplied start) and end at the parent;
    the ``derived`` and ``lower-central`` kinds are recorded top-down as
    computed.
    """

    kind: str
    parent: PermGroup
    terms: list[PermGroup]
    factor_tags: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown series kind {self.kind!r}")
        if not self.factor_tags:
            self.factor_tags = [UNCLASSIFIED] * max(len(self.terms) - 1, 0)

    def orders(self) -> list[int]:
        return [t.order() for t in self.terms]

    def __len__(self):
        return len(self.terms)

    @property
    def length(self) -> int:
        """Number of steps, i.e. factors."""
        return len(self.terms) - 1

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "orders": [str(o) if o >= 2**53 else o for o in self.orders()],
            "factor_tags": list(self.factor_tags),
            "generators": [[str(g) for g in t.generators] for t in self.terms],
        }
