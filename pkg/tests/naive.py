"""Literal, slow re-implementations used as test oracles.

Nothing here imports the scanning machinery: partitions are enumerated by
recursive insertion, coalitions are frozensets, and every concept is coded
straight from its definition.  Preferences are read through ``rank(i, S)``
(lower is better).
"""

from __future__ import annotations

from itertools import combinations


def set_partitions(players):
    players = list(players)
    if not players:
        yield []
        return
    first, rest = players[0], players[1:]
    for smaller in set_partitions(rest):
        for k in range(len(smaller)):
            yield smaller[:k] + [smaller[k] | {first}] + smaller[k + 1:]
        yield [frozenset({first})] + smaller


def subsets(players):
    players = sorted(players)
    for r in range(1, len(players) + 1):
        for c in combinations(players, r):
            yield frozenset(c)


class Naive:
    def __init__(self, n, rank):
        self.n = n
        self.rank = rank
        self.N = frozenset(range(1, n + 1))

    def partitions(self):
        for p in set_partitions(range(1, self.n + 1)):
            yield [frozenset(b) for b in p]

    @staticmethod
    def block(p, i):
        return next(b for b in p if i in b)

    def better(self, i, S, T):
        return self.rank(i, S) < self.rank(i, T)

    def weakly(self, i, S, T):
        return self.rank(i, S) <= self.rank(i, T)

    def reachable(self, p, q, H):
        rest = self.N - H
        for i in rest:
            for j in rest:
                if i != j and ((self.block(p, i) == self.block(p, j)) != (self.block(q, i) == self.block(q, j))):
                    return False
        return True

    def ir(self, p):
        return all(self.weakly(i, self.block(p, i), frozenset({i})) for i in self.N)

    def perfect(self, p):
        return all(
            not any(self.better(i, S, self.block(p, i)) for S in subsets(self.N) if i in S) for i in self.N
        )

    def _moves(self, p, i):
        for T in [b for b in p if i not in b] + [frozenset()]:
            yield T

    def ns(self, p):
        return not any(
            self.better(i, T | {i}, self.block(p, i)) for i in self.N for T in self._moves(p, i)
        )

    def is_(self, p):
        return not any(
            self.better(i, T | {i}, self.block(p, i)) and all(self.weakly(j, T | {i}, T) for j in T)
            for i in self.N for T in self._moves(p, i)
        )

    def core(self, p):
        return not any(all(self.better(i, S, self.block(p, i)) for i in S) for S in subsets(self.N))

    def strict_core(self, p):
        return not any(
            all(self.weakly(i, S, self.block(p, i)) for i in S) and any(self.better(i, S, self.block(p, i)) for i in S)
            for S in subsets(self.N)
        )

    def pareto(self, p):
        for q in self.partitions():
            if all(self.weakly(i, self.block(q, i), self.block(p, i)) for i in self.N) and any(
                self.better(i, self.block(q, i), self.block(p, i)) for i in self.N
            ):
                return False
        return True

    def _group(self, p, ok):
        key = sorted(frozenset(b) for b in p)
        for q in self.partitions():
            if sorted(q) == key:
                continue
            for H in subsets(self.N):
                if self.reachable(p, q, H) and ok(p, q, H):
                    return False
        return True

    def sns(self, p):
        return self._group(p, lambda p, q, H: all(self.better(i, self.block(q, i), self.block(p, i)) for i in H))

    def ssns(self, p):
        return self._group(
            p,
            lambda p, q, H: all(self.weakly(i, self.block(q, i), self.block(p, i)) for i in H)
            and any(self.better(i, self.block(q, i), self.block(p, i)) for i in H),
        )

    def sis(self, p):
        def ok(p, q, H):
            if not all(self.better(i, self.block(q, i), self.block(p, i)) for i in H):
                return False
            joined = set().union(*(self.block(q, i) for i in H))
            return all(self.weakly(j, self.block(q, j), self.block(p, j)) for j in joined)

        return self._group(p, ok)

    def table(self, p):
        return {
            "IR": self.ir(p), "PERFECT": self.perfect(p), "NS": self.ns(p), "IS": self.is_(p),
            "C": self.core(p), "SC": self.strict_core(p), "PO": self.pareto(p), "SNS": self.sns(p),
            "SSNS": self.ssns(p), "SIS": self.sis(p),
        }

    # preference restrictions, straight from the definitions

    def ch(self, i, X):
        subs = [S for S in subsets(X) if i in S]
        best = min(self.rank(i, S) for S in subs)
        return {S for S in subs if self.rank(i, S) == best}

    def av(self, i, X):
        subs = [S for S in subsets(X) if i in S]
        worst = max(self.rank(i, S) for S in subs)
        return {S for S in subs if self.rank(i, S) == worst}

    def top_responsive(self):
        for i in self.N:
            ctx = [X for X in subsets(self.N) if i in X]
            if any(len(self.ch(i, X)) != 1 for X in ctx):
                return False
            ch = {X: next(iter(self.ch(i, X))) for X in ctx}
            for X in ctx:
                for Y in ctx:
                    if self.better(i, ch[X], ch[Y]) and not self.better(i, X, Y):
                        return False
                    if ch[X] == ch[Y] and X < Y and not self.better(i, X, Y):
                        return False
        return True

    def bottom_responsive(self):
        for i in self.N:
            ctx = [X for X in subsets(self.N) if i in X]
            av = {X: self.av(i, X) for X in ctx}
            for X in ctx:
                for Y in ctx:
                    if all(self.better(i, a, b) for a in av[X] for b in av[Y]) and not self.better(i, X, Y):
                        return False
                    if av[X] & av[Y] and len(X) >= len(Y) and not self.weakly(i, X, Y):
                        return False
        return True


def naive_for(profile):
    from hedonic.core import to_mask

    return Naive(profile.n, lambda i, S: profile.tier(i, to_mask(S)))
