"""Presentations, the text format, and the symmetrized relator closure.

Text format::

    # comment lines start with '#'
    gens: a, b, c
    rel: abAB
    rel: acAC

Generator names are single lowercase ASCII letters; an uppercase letter
denotes the inverse of its lowercase generator.  Serialization is
canonical: generators sorted, relators kept in order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .errors import (
    ParseError,
    RelatorNotCyclicallyReduced,
    RelatorNotReduced,
    UnusedGenerator,
)
from .words import Letters, Word, invert, is_cyclically_reduced, is_reduced, rotate

DEFAULT_LAMBDA = Fraction(1, 24)


@dataclass(frozen=True)
class Origin:
    """Witness for one closure member: which relator produced it and how."""

    relator_index: int  # 1-based, matching report conventions
    rotation: int
    inverted: bool


class Presentation:
    def __init__(
        self,
        alphabet: List[str],
        relators: List[Word],
        lambda_target: Fraction = DEFAULT_LAMBDA,
        validate: bool = True,
    ):
        self.alphabet = list(alphabet)
        self.relators = list(relators)
        self.lambda_target = Fraction(lambda_target)
        if validate:
            self.validate()

    def validate(self) -> None:
        seen = set()
        for name in self.alphabet:
            if len(name) != 1 or not name.isalpha() or not name.islower():
                raise ParseError(0, 0, f"invalid generator name {name!r}")
            if name in seen:
                raise ParseError(0, 0, f"duplicate generator {name!r}")
            seen.add(name)
        used = set()
        for k, rel in enumerate(self.relators, start=1):
            if len(rel) == 0:
                raise RelatorNotReduced(f"relator {k} is empty")
            if not is_reduced(rel.letters):
                raise RelatorNotReduced(f"relator {k} is not freely reduced")
            if not is_cyclically_reduced(rel.letters):
                raise RelatorNotCyclicallyReduced(
                    f"relator {k} is not cyclically reduced"
                )
            for x in rel:
                g = abs(x) - 1
                if g >= len(self.alphabet):
                    raise ParseError(0, 0, f"relator {k} uses unknown generator")
                used.add(g)
        # A generator appearing in no relator would split off a free factor;
        # such presentations are rejected rather than silently split.  A
        # relator-free presentation is allowed as the free-group baseline.
        if self.relators and used != set(range(len(self.alphabet))):
            missing = [self.alphabet[g] for g in sorted(set(range(len(self.alphabet))) - used)]
            raise UnusedGenerator(f"generators {missing} appear in no relator")

    @property
    def num_generators(self) -> int:
        return len(self.alphabet)

    def letter_name(self, x: int) -> str:
        name = self.alphabet[abs(x) - 1]
        return name if x > 0 else name.upper()

    def word_str(self, w: Word) -> str:
        return "".join(self.letter_name(x) for x in w)

    def parse_word(self, text: str, line: int = 0, col0: int = 0) -> Word:
        index = {name: g for g, name in enumerate(self.alphabet)}
        letters = []
        for j, ch in enumerate(text):
            low = ch.lower()
            if low not in index:
                raise ParseError(line, col0 + j + 1, f"unknown generator {ch!r}")
            g = index[low] + 1
            letters.append(g if ch.islower() else -g)
        return Word(letters, reduce=False)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Presentation)
            and self.alphabet == other.alphabet
            and self.relators == other.relators
        )

    def __repr__(self) -> str:
        rels = ", ".join(self.word_str(r) for r in self.relators)
        return f"<Presentation gens={','.join(self.alphabet)} rels=[{rels}]>"


@dataclass
class SymmetrizedClosure:
    """All distinct reduced cyclic conjugates of the relators and inverses."""

    presentation: Presentation
    members: List[Word] = field(default_factory=list)
    origin: Dict[Word, Origin] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.members)

    def total_length(self) -> int:
        return sum(len(m) for m in self.members)


def symmetrize(p: Presentation) -> SymmetrizedClosure:
    """Close the relator list under rotation and inversion, deduplicated."""
    closure = SymmetrizedClosure(presentation=p)
    seen: Dict[Letters, Origin] = {}
    for k, rel in enumerate(p.relators, start=1):
        if not is_cyclically_reduced(rel.letters):
            raise RelatorNotCyclicallyReduced(f"relator {k} is not cyclically reduced")
        for inverted, base in ((False, rel.letters), (True, invert(rel.letters))):
            for q in range(len(base)):
                w = rotate(base, q)
                if w not in seen:
                    seen[w] = Origin(relator_index=k, rotation=q, inverted=inverted)
    for w, org in seen.items():
        word = Word(w, reduce=False)
        closure.members.append(word)
        closure.origin[word] = org
    return closure


def parse_presentation(text: str, lambda_target: Fraction = DEFAULT_LAMBDA) -> Presentation:
    alphabet: Optional[List[str]] = None
    relator_texts: List[Tuple[str, int, int]] = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.lstrip()
        indent = len(line) - len(stripped)
        if stripped.startswith("gens:"):
            if alphabet is not None:
                raise ParseError(ln, indent + 1, "duplicate gens line")
            names = [s.strip() for s in stripped[len("gens:"):].split(",")]
            names = [s for s in names if s]
            if not names:
                raise ParseError(ln, indent + len("gens:") + 1, "no generators listed")
            for name in names:
                if len(name) != 1 or not name.isalpha() or not name.islower():
                    raise ParseError(ln, line.find(name) + 1, f"invalid generator {name!r}")
            if len(set(names)) != len(names):
                raise ParseError(ln, indent + 1, "duplicate generator")
            alphabet = names
        elif stripped.startswith("rel:"):
            if alphabet is None:
                raise ParseError(ln, indent + 1, "rel line before gens line")
            body = stripped[len("rel:"):].strip()
            if not body:
                raise ParseError(ln, indent + len("rel:") + 1, "empty relator")
            col0 = line.find(body)
            relator_texts.append((body, ln, col0))
        else:
            raise ParseError(ln, indent + 1, f"unrecognized line {stripped.split()[0]!r}")
    if alphabet is None:
        raise ParseError(0, 0, "missing gens line")

    proto = Presentation(alphabet, [], lambda_target, validate=False)
    relators = []
    for body, ln, col0 in relator_texts:
        w = proto.parse_word(body, line=ln, col0=col0)
        if not is_reduced(w.letters):
            raise RelatorNotReduced(f"line {ln}: relator {body!r} is not freely reduced")
        if not is_cyclically_reduced(w.letters):
            raise RelatorNotCyclicallyReduced(
                f"line {ln}: relator {body!r} is not cyclically reduced"
            )
        relators.append(w)
    return Presentation(alphabet, relators, lambda_target)


def serialize_presentation(p: Presentation) -> str:
    order = sorted(range(len(p.alphabet)), key=lambda g: p.alphabet[g])
    gens = ", ".join(p.alphabet[g] for g in order)
    lines = [f"gens: {gens}"]
    for rel in p.relators:
        lines.append(f"rel: {p.word_str(rel)}")
    return "\n".join(lines) + "\n"
