"""Knuth-Bendix completion for length-preserving monoid presentations.

Every relation has both sides of equal length, so rules are oriented by
plain lexicographic order and all rewriting stays inside one length.
Completion can be cut off at a degree ``D``: critical pairs whose overlap
word is longer than ``D`` are dropped.  The resulting system is still
confluent on words of length at most ``D``, because no longer overlap can
occur inside such a word.  If nothing was ever dropped the system is
confluent on all words.
"""

from collections import deque


class RuleBudgetExceeded(Exception):
    pass


class Rewriter:
    def __init__(self, relations, degree, max_rules=20000):
        self.degree = degree
        self.max_rules = max_rules
        self.rules = {}
        self.truncated = False
        self._lengths = []
        self._pending = deque((tuple(u), tuple(v)) for u, v in relations)
        self._complete()

    @property
    def complete(self):
        """True when the system is confluent for words of every length."""
        return not self.truncated

    def covers(self, length):
        return not self.truncated or length <= self.degree

    def reduce(self, word, prefix=()):
        """Normal form of ``prefix + word``; ``prefix`` must be irreducible."""
        # the output stack stays irreducible, so any new redex ends at the
        # letter just pushed
        rules, lengths = self.rules, self._lengths
        out = list(prefix)
        todo = list(reversed(word))
        while todo:
            out.append(todo.pop())
            for size in lengths:
                if size > len(out):
                    break
                rhs = rules.get(tuple(out[-size:]))
                if rhs is not None:
                    del out[-size:]
                    todo.extend(reversed(rhs))
                    break
        return tuple(out)

    def _add(self, lhs, rhs):
        rules = self.rules
        rules[lhs] = rhs
        for k in list(rules):
            if k != lhs and _contains(k, lhs):
                self._pending.append((k, rules.pop(k)))
        self._lengths = sorted({len(k) for k in rules})
        for k in list(rules):
            if k != lhs:
                rules[k] = self.reduce(rules[k])
        for k, v in list(rules.items()):
            for a, ra, b, rb in ((lhs, rhs, k, v), (k, v, lhs, rhs)):
                for o in range(1, min(len(a), len(b))):
                    if a[-o:] == b[:o]:
                        if len(a) + len(b) - o > self.degree:
                            self.truncated = True
                            continue
                        self._pending.append((ra + b[o:], a[:-o] + rb))

    def _complete(self):
        while self._pending:
            u, v = self._pending.popleft()
            u, v = self.reduce(u), self.reduce(v)
            if u == v:
                continue
            if u < v:
                u, v = v, u
            if len(u) > self.degree:
                self.truncated = True
                continue
            self._add(u, v)
            if len(self.rules) > self.max_rules:
                raise RuleBudgetExceeded(len(self.rules))


def _contains(word, sub):
    k = len(sub)
    return any(word[i:i + k] == sub for i in range(len(word) - k + 1))
