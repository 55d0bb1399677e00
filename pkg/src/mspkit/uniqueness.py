"""Deciding whether an instance pins down exactly one secret.

A satisfiable instance with witness s is unique precisely when no extension
of the instance by (s, p) is satisfiable, where p ranges over every declared
score other than the perfect (ell, 0).  Any second solution t would survive
the extension by the true score of (s, t), and conversely a surviving
solution of an extension differs from s (its score against s is imperfect),
so checking all ell*(ell+3)/2 imperfect pairs settles uniqueness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Code, Score
from .errors import InvalidInputError
from .solver import MspInstance, ScoredGuess, solve


@dataclass(frozen=True)
class UniquenessReport:
    satisfiable: bool
    unique: bool
    witness: Code | None
    followups_tried: int


def score_pairs_excluding_perfect(ell: int) -> list[Score]:
    """Every (black, white) a length-ell score can declare, minus (ell, 0).

    Lexicographic order; 0 <= black <= ell - 1 and 0 <= white <= ell - black,
    giving exactly ell * (ell + 3) / 2 pairs.  Game-impossible pairs such as
    (ell - 1, 1) are included by design; they simply never satisfy.
    """
    if not isinstance(ell, int) or ell < 1:
        raise InvalidInputError(f"length must be a positive integer, got {ell!r}")
    return [Score(black, white)
            for black in range(ell)
            for white in range(ell - black + 1)]


def is_unique(instance: MspInstance, mode: str = "backtrack") -> UniquenessReport:
    """Solve, then probe every imperfect follow-up score of the witness.

    Stops at the first satisfiable follow-up (early exit), so
    ``followups_tried`` equals the full pair count exactly when the
    instance is unique.
    """
    base = solve(instance, mode=mode)
    if not base.satisfiable:
        return UniquenessReport(False, False, None, 0)
    witness = base.witness
    assert witness is not None
    tried = 0
    for pair in score_pairs_excluding_perfect(instance.length):
        extended = MspInstance(
            instance.palette, instance.length,
            instance.guesses + (ScoredGuess(witness, pair),))
        tried += 1
        if solve(extended, mode=mode).satisfiable:
            return UniquenessReport(True, False, witness, tried)
    return UniquenessReport(True, True, witness, tried)
