"""Satisfiability of scored-guess collections.

An instance is a palette, a code length, and a list of guesses each carrying
a declared score.  It is satisfiable when some secret code would have
produced every declared score.  Two engines decide this:

* exhaustive - lexicographic sweep of all kappa**ell candidates, guarded by
  a size cap.  Trivially correct; the oracle for everything else.
* backtracking - depth-first assignment of positions left to right, colors
  ascending, pruning partial assignments that already violate a declared
  black count or per-color usage implied by a declared score, or that can no
  longer reach one.  Finds the lexicographically smallest witness first.
  Backed up by a position-free feasibility check on color multisets (see
  _multiset_feasible) that refutes many instances outright and cuts doomed
  subtrees early; it only ever prunes on proof.

Both engines return identical answers and witnesses; the test suite enforces
this differentially.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from operator import eq
from typing import Iterator, NamedTuple

from .core import Code, Palette, Score, validate_code
from .errors import InvalidInputError, ResourceLimitError

DEFAULT_EXHAUSTIVE_CAP = 10**8

MODES = ("backtrack", "exhaustive")


@dataclass(frozen=True)
class ScoredGuess:
    guess: Code
    declared: Score


@dataclass(frozen=True)
class MspInstance:
    """A palette, a code length, and guesses with declared scores."""

    palette: Palette
    length: int
    guesses: tuple[ScoredGuess, ...]

    def __post_init__(self):
        if not isinstance(self.length, int) or self.length < 1:
            raise InvalidInputError(f"code length must be a positive integer, got {self.length!r}")
        for sg in self.guesses:
            validate_code(sg.guess, self.palette, length=self.length)
            black, white = sg.declared
            if black < 0 or white < 0 or black + white > self.length:
                raise InvalidInputError(
                    f"declared score {sg.declared} out of range for length {self.length}"
                )

    @property
    def kappa(self) -> int:
        return self.palette.kappa


class SolveOutcome(NamedTuple):
    satisfiable: bool
    witness: Code | None


class Enumeration(NamedTuple):
    codes: tuple[Code, ...]
    truncated: bool


def verify(instance: MspInstance, candidate: Code) -> bool:
    """True iff ``candidate`` reproduces every declared score.

    Runs in O(#guesses * (length + kappa)); guesses were validated when the
    instance was built, so only the candidate is checked here.
    """
    validate_code(candidate, instance.palette, length=instance.length)
    cand_counts = Counter(candidate)
    for sg in instance.guesses:
        black = sum(map(eq, sg.guess, candidate))
        if black != sg.declared.black:
            return False
        matches = sum((Counter(sg.guess) & cand_counts).values())
        if matches - black != sg.declared.white:
            return False
    return True


def solve(instance: MspInstance, mode: str = "backtrack",
          cap: int = DEFAULT_EXHAUSTIVE_CAP) -> SolveOutcome:
    """Decide satisfiability; on YES the witness is the lex-smallest solution."""
    if mode == "backtrack":
        if _multiset_feasible(instance) is False:
            return SolveOutcome(False, None)
        found: list[Code] = []
        _Search(instance, canonical=True).run(limit=1, out=found)
        if found:
            return SolveOutcome(True, found[0])
        return SolveOutcome(False, None)
    if mode == "exhaustive":
        for code in _all_codes(instance, cap):
            if verify(instance, code):
                return SolveOutcome(True, code)
        return SolveOutcome(False, None)
    raise InvalidInputError(f"unknown mode {mode!r}; expected one of {MODES}")


def enumerate_all(instance: MspInstance, cap: int) -> Enumeration:
    """All solutions in lexicographic order, truncated at ``cap``.

    Backtracking enumeration with every solution-preserving pruning rule but
    no dominance shortcuts, so each solution is visited exactly once.
    """
    if cap < 1:
        raise InvalidInputError(f"enumeration cap must be positive, got {cap}")
    if _multiset_feasible(instance) is False:
        return Enumeration((), False)
    found: list[Code] = []
    _Search(instance, canonical=False).run(limit=cap + 1, out=found)
    return Enumeration(tuple(found[:cap]), len(found) > cap)


_MULTISET_CHECK_BUDGET = 200_000
_RESIDUAL_CHECK_BUDGET = 50_000


def _multiset_feasible(instance: MspInstance,
                       budget: int = _MULTISET_CHECK_BUDGET) -> bool | None:
    """Does any color multiset hit every guess's declared match total?

    A solution's multiset must satisfy, for every guess g,
    sum_c min(count(c), guess_count_g(c)) == declared black + white; this
    check decides that system alone, ignoring positions.  False is a proof
    of unsatisfiability (used as a root-level shortcut), True or None (step
    budget exhausted) says nothing.  Position-free reasoning is what makes
    refutations of dense cover encodings cheap: the shared vertex budget and
    the per-edge totals conflict at this level already.
    """
    kappa = instance.kappa
    n = len(instance.guesses)
    if n == 0:
        return True
    targets = [sg.declared.black + sg.declared.white for sg in instance.guesses]
    caps = [[0] * (kappa + 1) for _ in range(n)]
    for gi, sg in enumerate(instance.guesses):
        for c in sg.guess:
            caps[gi][c] += 1
    return _system_feasible(kappa, instance.length, caps, targets, budget)


def _system_feasible(kappa: int, ell: int, caps: list[list[int]],
                     targets: list[int], budget: int) -> bool | None:
    """Core of the multiset check: exists k >= 0 per color with
    sum(k) == ell and sum_c min(k_c, caps[g][c]) == targets[g] for all g.

    Mutates ``caps``.  Returns False only on proof of infeasibility.
    """
    n = len(targets)
    # a color with remaining capacity in a target-0 guess can never be used;
    # dropping its caps everywhere keeps the suffix bounds honest about that
    dead = [False] * (kappa + 1)
    for gi in range(n):
        if targets[gi] == 0:
            row = caps[gi]
            for c in range(1, kappa + 1):
                if row[c]:
                    dead[c] = True
    for c in range(1, kappa + 1):
        if dead[c]:
            for row in caps:
                row[c] = 0
    topcap = [0] * (kappa + 1)
    for c in range(1, kappa + 1):
        topcap[c] = max(row[c] for row in caps)
    # suffix[gi][c]: match total still obtainable from colors > c
    suffix = [[0] * (kappa + 2) for _ in range(n)]
    for gi in range(n):
        srow = suffix[gi]
        crow = caps[gi]
        for c in range(kappa, 0, -1):
            srow[c] = srow[c + 1] + crow[c]

    steps = 0

    def dfs(c: int, total: int, running: list[int], inflatable: bool) -> bool | None:
        nonlocal steps
        steps += 1
        if steps > budget:
            return None
        if c > kappa:
            if total > ell or (total < ell and not inflatable):
                return False
            return all(running[gi] == targets[gi] for gi in range(n))
        limit = min(topcap[c], ell - total)
        k = 0
        while True:
            gains = [min(k, caps[gi][c]) for gi in range(n)]
            if any(running[gi] + gains[gi] > targets[gi] for gi in range(n)):
                break  # larger k only overshoots further
            if all(running[gi] + gains[gi] + suffix[gi][c + 1] >= targets[gi]
                   for gi in range(n)):
                nxt = [running[gi] + gains[gi] for gi in range(n)]
                sub = dfs(c + 1, total + k,
                          nxt, inflatable or k == topcap[c])
                if sub is not False:
                    return sub
            if k == limit:
                break
            k += 1
        return False

    return dfs(1, 0, [0] * n, False)


def _all_codes(instance: MspInstance, cap: int) -> Iterator[Code]:
    total = instance.kappa ** instance.length
    if total > cap:
        raise ResourceLimitError(
            f"exhaustive search over {total} candidates exceeds cap {cap}"
        )
    from itertools import product

    return product(range(1, instance.kappa + 1), repeat=instance.length)


class _Search:
    """Shared depth-first engine for solve() and enumerate_all().

    Pruning (always on; removes no solutions):

    * black counts: a partial assignment may never exceed a guess's declared
      black count, and the open positions whose guess peg is not banned must
      keep the exact count reachable.
    * color matches: the running per-color match total for a guess may never
      exceed declared black + white, and the deficit must stay coverable by
      colors that some unsaturated guess still accepts.
    * colors of a guess declared (0, 0) are banned outright.

    Canonical mode (solve only; preserves satisfiability and the
    lex-smallest solution but collapses interchangeable branches):

    * inert dedup: colors that can no longer change any black or match count
      lead to identical subtrees, so only the smallest is tried per node.
    * ascending stream: once a color has no positional occurrence ahead it
      is order-interchangeable with later such colors; a (floor value,
      floor position) pair with ascend-only updates skips placements that a
      value swap would turn into a lex-smaller solution.
    """

    def __init__(self, instance: MspInstance, canonical: bool):
        self.ell = instance.length
        self.kappa = instance.palette.kappa
        self.canonical = canonical
        guesses = instance.guesses
        self.n = len(guesses)
        kap1 = self.kappa + 1

        self.pegs = [sg.guess for sg in guesses]
        self.b_target = [sg.declared.black for sg in guesses]
        self.w_target = [sg.declared.black + sg.declared.white for sg in guesses]

        self.gcount = [[0] * kap1 for _ in range(self.n)]
        for gi, p in enumerate(self.pegs):
            for c in p:
                self.gcount[gi][c] += 1
        self.support = [
            tuple(c for c in range(1, kap1) if cnt[c]) for cnt in self.gcount
        ]
        self.by_color: list[list[tuple[int, int]]] = [[] for _ in range(kap1)]
        for gi in range(self.n):
            for c in self.support[gi]:
                self.by_color[c].append((gi, self.gcount[gi][c]))
        # thresh[c][t]: number of guesses holding exactly t pegs of color c;
        # drives O(1) maintenance of unsat_cnt below.
        self.thresh: list[dict[int, int]] = [{} for _ in range(kap1)]
        for c in range(1, kap1):
            for _, t in self.by_color[c]:
                self.thresh[c][t] = self.thresh[c].get(t, 0) + 1

        self.banned = [False] * kap1
        for gi in range(self.n):
            if self.w_target[gi] == 0:
                for c in self.support[gi]:
                    self.banned[c] = True

        # at_pos[i][c]: guesses whose peg at position i is c.
        self.at_pos: list[dict[int, tuple[int, ...]]] = []
        for i in range(self.ell):
            here: dict[int, list[int]] = {}
            for gi, p in enumerate(self.pegs):
                here.setdefault(p[i], []).append(gi)
            self.at_pos.append({c: tuple(gs) for c, gs in here.items()})

        # suffix_open[gi][i]: positions >= i where guess gi's peg is not banned.
        self.suffix_open = [[0] * (self.ell + 1) for _ in range(self.n)]
        for gi, p in enumerate(self.pegs):
            acc = 0
            for i in range(self.ell - 1, -1, -1):
                if not self.banned[p[i]]:
                    acc += 1
                self.suffix_open[gi][i] = acc

        self.last_occ = [-1] * kap1
        for p in self.pegs:
            for i, c in enumerate(p):
                if i > self.last_occ[c]:
                    self.last_occ[c] = i

        # mutable search state
        self.cnt = [0] * kap1
        self.b_par = [0] * self.n
        self.m_par = [0] * self.n
        # unsat_cnt[c]: guesses whose match count would still grow on color c
        self.unsat_cnt = [len(self.by_color[c]) for c in range(kap1)]
        self.prefix = [0] * self.ell
        self.out: list[Code] = []
        self.limit = 0

    def run(self, limit: int, out: list[Code]) -> None:
        self.out = out
        self.limit = limit
        if self._feasible(-1, 0, -1):
            self._dfs(0, 0, -1)

    def _dfs(self, i: int, floor_c: int, floor_pos: int) -> None:
        # floor starts at (0, -1): no color is below it and no position is
        # before it, so nothing is skipped until a stream placement occurs.
        last = i + 1 == self.ell
        at_i = self.at_pos[i]
        tried_inert = False
        for c in range(1, self.kappa + 1):
            if self.banned[c]:
                continue
            eligible = self.last_occ[c] < i
            if self.canonical and eligible and c < floor_c and self.last_occ[c] < floor_pos:
                continue
            hits = at_i.get(c, ())
            if self.canonical and not hits and self.unsat_cnt[c] == 0:
                if tried_inert:
                    continue
                tried_inert = True

            ok = True
            for gi in hits:
                if self.b_par[gi] + 1 > self.b_target[gi]:
                    ok = False
                    break
            if not ok:
                continue
            bumps: tuple[int, ...] = ()
            if self.unsat_cnt[c]:
                csn = self.cnt[c]
                acc = []
                for gi, t in self.by_color[c]:
                    if t > csn:
                        if self.m_par[gi] + 1 > self.w_target[gi]:
                            ok = False
                            break
                        acc.append(gi)
                if not ok:
                    continue
                bumps = tuple(acc)

            for gi in hits:
                self.b_par[gi] += 1
            for gi in bumps:
                self.m_par[gi] += 1
            self.cnt[c] += 1
            self.unsat_cnt[c] -= self.thresh[c].get(self.cnt[c], 0)
            self.prefix[i] = c

            if last:
                if self._exact():
                    self.out.append(tuple(self.prefix))
            else:
                if self.canonical and eligible and c >= floor_c:
                    nf_c, nf_p = c, i  # ascend-only floor update
                else:
                    nf_c, nf_p = floor_c, floor_pos
                if self._feasible(i, nf_c, nf_p):
                    # a guess saturated by this placement bans its unfilled
                    # colors; that is when the multiset system, checked on
                    # the residue, tends to become refutable
                    fire = False
                    for gi in bumps:
                        if self.m_par[gi] == self.w_target[gi]:
                            gc = self.gcount[gi]
                            for c2 in self.support[gi]:
                                if gc[c2] > self.cnt[c2]:
                                    fire = True
                                    break
                        if fire:
                            break
                    if not fire or self._residual_feasible(i) is not False:
                        self._dfs(i + 1, nf_c, nf_p)

            self.unsat_cnt[c] += self.thresh[c].get(self.cnt[c], 0)
            self.cnt[c] -= 1
            for gi in bumps:
                self.m_par[gi] -= 1
            for gi in hits:
                self.b_par[gi] -= 1

            if len(self.out) >= self.limit:
                return

    def _exact(self) -> bool:
        b_par, m_par = self.b_par, self.m_par
        b_t, w_t = self.b_target, self.w_target
        for gi in range(self.n):
            if b_par[gi] != b_t[gi] or m_par[gi] != w_t[gi]:
                return False
        return True

    def _feasible(self, i: int, floor_c: int, floor_pos: int) -> bool:
        """Can the suffix after position i still reach every declared score?"""
        rem = self.ell - i - 1
        nxt = i + 1
        blocked: list[bool] | None = None
        for gi in range(self.n):
            if self.b_par[gi] + self.suffix_open[gi][nxt] < self.b_target[gi]:
                return False
            need = self.w_target[gi] - self.m_par[gi]
            if need == 0:
                continue
            if need > rem:
                return False
            if blocked is None:
                blocked = self._blocked_colors(floor_c, floor_pos)
            gain = 0
            cnt, gc = self.cnt, self.gcount[gi]
            for c in self.support[gi]:
                if blocked[c]:
                    continue
                d = gc[c] - cnt[c]
                if d > 0:
                    gain += d
                    if gain >= need:
                        break
            if gain < need:
                return False
        return True

    def _residual_feasible(self, i: int) -> bool | None:
        """Multiset check on what is left after position i; False is a proof."""
        rem = self.ell - i - 1
        cnt = self.cnt
        targets = [self.w_target[gi] - self.m_par[gi] for gi in range(self.n)]
        caps = []
        for gi in range(self.n):
            gc = self.gcount[gi]
            row = [0] * (self.kappa + 1)
            for c in self.support[gi]:
                d = gc[c] - cnt[c]
                if d > 0:
                    row[c] = d
            caps.append(row)
        return _system_feasible(self.kappa, rem, caps, targets,
                                _RESIDUAL_CHECK_BUDGET)

    def _blocked_colors(self, floor_c: int, floor_pos: int) -> list[bool]:
        """Colors no future placement may use without overshooting a guess."""
        blocked = [False] * (self.kappa + 1)
        for gi in range(self.n):
            if self.m_par[gi] == self.w_target[gi]:
                cnt, gc = self.cnt, self.gcount[gi]
                for c in self.support[gi]:
                    if gc[c] > cnt[c]:
                        blocked[c] = True
        if self.canonical:
            # the ascending stream never revisits colors below the floor
            # (ascend-only floor updates make this permanent)
            for c in range(1, min(floor_c, self.kappa + 1)):
                if self.last_occ[c] < floor_pos:
                    blocked[c] = True
        return blocked
