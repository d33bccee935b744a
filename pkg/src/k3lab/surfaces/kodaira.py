"""Kodaira fiber types in residue characteristic zero.

The type is a function of the minimal valuation triple (v(c4), v(c6),
v(delta)) alone.  Each type knows its Euler number, component count, root
lattice and the local height-pairing contribution table; non-identity
components are addressed by small labels ("near", "far1", ... for starred
fibers, integers mod n for I_n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class KodairaFiber:
    symbol: str  # "I0", "In", "II", ..., "In*", "II*", ...
    n: int  # the n in I_n / I_n*; 0 otherwise

    def __post_init__(self):
        if self.symbol not in ("In", "In*") and self.n:
            raise ValueError("n only applies to I_n and I_n*")

    @staticmethod
    def parse(text: str) -> "KodairaFiber":
        text = text.strip()
        if text in ("II", "III", "IV", "II*", "III*", "IV*", "I0"):
            return KodairaFiber(text, 0)
        star = text.endswith("*")
        body = text[:-1] if star else text
        if body.startswith("I") and body[1:].isdigit():
            n = int(body[1:])
            if star:
                return KodairaFiber("In*", n)
            return KodairaFiber("I0", 0) if n == 0 else KodairaFiber("In", n)
        raise ValueError(f"unknown Kodaira symbol {text!r}")

    @property
    def name(self) -> str:
        if self.symbol == "In":
            return f"I{self.n}"
        if self.symbol == "In*":
            return f"I{self.n}*"
        return self.symbol

    @property
    def euler(self) -> int:
        return {
            "I0": 0,
            "In": self.n,
            "II": 2,
            "III": 3,
            "IV": 4,
            "In*": self.n + 6,
            "IV*": 8,
            "III*": 9,
            "II*": 10,
        }[self.symbol]

    @property
    def component_count(self) -> int:
        return {
            "I0": 1,
            "In": max(self.n, 1),
            "II": 1,
            "III": 2,
            "IV": 3,
            "In*": self.n + 5,
            "IV*": 7,
            "III*": 8,
            "II*": 9,
        }[self.symbol]

    @property
    def root_lattice(self) -> tuple[str, int] | None:
        """(kind, rank) of the negative-definite root part, or None."""
        if self.symbol == "In":
            return ("A", self.n - 1) if self.n >= 2 else None
        if self.symbol == "III":
            return ("A", 1)
        if self.symbol == "IV":
            return ("A", 2)
        if self.symbol == "In*":
            return ("D", self.n + 4)
        if self.symbol == "IV*":
            return ("E", 6)
        if self.symbol == "III*":
            return ("E", 7)
        if self.symbol == "II*":
            return ("E", 8)
        return None

    @property
    def is_multiplicative(self) -> bool:
        return self.symbol == "In"

    def simple_components(self) -> list[object]:
        """Labels of the components a section can meet."""
        if self.symbol in ("I0", "II", "II*"):
            return [0]
        if self.symbol == "In":
            return list(range(self.n))
        if self.symbol == "III":
            return [0, "far"]
        if self.symbol == "IV":
            return [0, "far1", "far2"]
        if self.symbol == "In*":
            return [0, "near", "far1", "far2"]
        if self.symbol == "IV*":
            return [0, "far1", "far2"]
        if self.symbol == "III*":
            return [0, "far"]
        raise AssertionError

    def contribution(self, comp) -> Fraction:
        """Diagonal local height contribution of a section through comp."""
        if comp == 0 or comp == "0":
            return Fraction(0)
        s = self.symbol
        if s == "In":
            k = int(comp) % self.n
            return Fraction(k * (self.n - k), self.n)
        if s == "III":
            return Fraction(1, 2)
        if s == "IV":
            return Fraction(2, 3)
        if s == "In*":
            if comp == "near":
                return Fraction(1)
            return 1 + Fraction(self.n, 4)
        if s == "IV*":
            return Fraction(4, 3)
        if s == "III*":
            return Fraction(3, 2)
        raise ValueError(f"{self.name} has no non-identity simple component {comp!r}")

    def pair_contribution(self, ca, cb) -> Fraction:
        """Off-diagonal contribution for two sections through ca, cb.

        For I_n the labels are oriented component indices mod n.
        """
        if ca == 0 or cb == 0 or ca == "0" or cb == "0":
            return Fraction(0)
        if ca == cb:
            return self.contribution(ca)
        s = self.symbol
        if s == "In":
            i, j = sorted((int(ca) % self.n, int(cb) % self.n))
            return Fraction(i * (self.n - j), self.n)
        if s == "In*":
            if "near" in (ca, cb):
                return Fraction(1, 2)
            return Fraction(self.n + 2, 4)  # two distinct far components
        if s == "IV":
            return Fraction(1, 3)
        if s == "IV*":
            return Fraction(2, 3)
        raise ValueError(f"{self.name}: no pair contribution for {ca!r}, {cb!r}")

    def component_group(self) -> tuple[int, ...]:
        """Invariant factors of the component group (torsion bound)."""
        s = self.symbol
        if s == "In":
            return (self.n,) if self.n > 1 else ()
        if s == "III" or s == "III*":
            return (2,)
        if s == "IV" or s == "IV*":
            return (3,)
        if s == "In*":
            return (2, 2) if self.n % 2 == 0 else (4,)
        return ()

    def translation_shift(self, comp):
        """Addition law on simple-component labels (torsion translation)."""
        s = self.symbol
        if s == "In":
            def shift(other):
                return (int(other) + int(comp)) % self.n

            return shift
        raise ValueError("component addition is only automatic for I_n")


def kodaira_type(v_c4, v_c6, v_delta) -> KodairaFiber:
    """Classify the fiber from a minimal valuation triple.

    Valid in residue characteristic zero.  Raises on non-minimal or
    inconsistent triples.
    """
    a, b, d = v_c4, v_c6, v_delta
    if a >= 4 and b >= 6 and d >= 12:
        raise ValueError(f"triple {(a, b, d)} is not minimal")
    if d < 0 or (a < 0 or b < 0):
        raise ValueError(f"negative valuation in {(a, b, d)}")
    if d == 0:
        return KodairaFiber("I0", 0)
    if a == 0 and b == 0:
        return KodairaFiber("In", int(d))
    if b == 1 and d == 2 and a >= 1:
        return KodairaFiber("II", 0)
    if a == 1 and d == 3 and b >= 2:
        return KodairaFiber("III", 0)
    if b == 2 and d == 4 and a >= 2:
        return KodairaFiber("IV", 0)
    if d == 6 and a >= 2 and b >= 3:
        return KodairaFiber("In*", 0)
    if a == 2 and b == 3 and d > 6:
        return KodairaFiber("In*", int(d) - 6)
    if b == 4 and d == 8 and a >= 3:
        return KodairaFiber("IV*", 0)
    if a == 3 and d == 9 and b >= 5:
        return KodairaFiber("III*", 0)
    if b == 5 and d == 10 and a >= 4:
        return KodairaFiber("II*", 0)
    raise ValueError(f"inconsistent valuation triple {(a, b, d)}")
