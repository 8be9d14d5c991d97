"""Polycyclic inverse monoids on n generators and their r-fold matrix variants.

A nonzero element is a pair of words y, x over the same alphabet, thought of as
the partial prefix substitution w = x.rest |-> y.rest; x is the domain side.
Products follow the usual three-case rule: (y x^-1)(v u^-1) is (y z) u^-1 when
v = x z, is y (u z)^-1 when x = v z, and 0 otherwise.

The r-fold variant decorates a nonzero element with a range root i and a domain
root j in 1..r; products compose only when the inner roots agree.
"""

import re
from collections import namedtuple

from .words import (
    Word,
    format_word,
    parse_word,
    prefix_covers_depth,
    _strip_prefix,
)

PolyElement = namedtuple("PolyElement", ["n", "y", "x"])
ExtPolyElement = namedtuple("ExtPolyElement", ["n", "r", "i", "m", "j"])


def poly(n, y, x):
    y = tuple(y)
    x = tuple(x)
    for a in y + x:
        if not 0 <= a < n:
            raise ValueError("letter index %r out of range for alphabet of size %d" % (a, n))
    return PolyElement(n, y, x)


def poly_zero(n):
    return PolyElement(n, None, None)


def poly_one(n):
    return PolyElement(n, (), ())


def poly_is_zero(s):
    return s.y is None


def _check_n(s, t):
    if s.n != t.n:
        raise ValueError("alphabet mismatch: %d vs %d" % (s.n, t.n))


def poly_mul(s, t):
    _check_n(s, t)
    if poly_is_zero(s) or poly_is_zero(t):
        return poly_zero(s.n)
    z = _strip_prefix(s.x, t.y)
    if z is not None:
        return PolyElement(s.n, s.y + z, t.x)
    z = _strip_prefix(t.y, s.x)
    if z is not None:
        return PolyElement(s.n, s.y, t.x + z)
    return poly_zero(s.n)


def poly_inv(s):
    if poly_is_zero(s):
        return s
    return PolyElement(s.n, s.x, s.y)


def poly_is_idempotent(s):
    return poly_is_zero(s) or s.y == s.x


def poly_dom(s):
    # d(s) = s^-1 s
    if poly_is_zero(s):
        return s
    return PolyElement(s.n, s.x, s.x)


def poly_ran(s):
    if poly_is_zero(s):
        return s
    return PolyElement(s.n, s.y, s.y)


def poly_leq(s, t):
    """Natural order: s <= t iff s = t (s^-1 s), i.e. both coordinates of s
    extend those of t by one common word."""
    _check_n(s, t)
    if poly_is_zero(s):
        return True
    if poly_is_zero(t):
        return False
    p = _strip_prefix(t.y, s.y)
    return p is not None and s.x == t.x + p


def poly_meet(s, t):
    _check_n(s, t)
    if poly_leq(s, t):
        return s
    if poly_leq(t, s):
        return t
    # incomparable nonzero elements never share a nonzero lower bound here
    return poly_zero(s.n)


def poly_compatible(s, t):
    return poly_is_idempotent(poly_mul(poly_inv(s), t)) and poly_is_idempotent(
        poly_mul(s, poly_inv(t))
    )


def poly_orthogonal(s, t):
    return poly_is_zero(poly_mul(poly_inv(s), t)) and poly_is_zero(
        poly_mul(s, poly_inv(t))
    )


def poly_act(s, w):
    """Apply the partial prefix substitution: defined iff x is a prefix of w."""
    if not isinstance(w, Word):
        raise TypeError("poly_act expects a Word")
    if s.n != w.n:
        raise ValueError("alphabet mismatch")
    if poly_is_zero(s):
        return None
    rem = _strip_prefix(s.x, w.letters)
    if rem is None:
        return None
    return Word(s.n, s.y + rem)


def _meet_tails(a, meets):
    """Extension words w with a_w = (y w)(x w)^-1 ranging over the given meets."""
    tails = set()
    for m in meets:
        if poly_is_zero(m):
            continue
        tails.add(m.x[len(a.x):])
    return tails


def lenz_arrow(a, B):
    """Decide whether every nonzero element below a meets some member of B.

    Every nonzero element below a is a_w for a unique extension word w, and a_w
    meets b iff w is prefix-comparable with b's tail, so the answer only depends
    on the set of tails: it is yes iff every word of length L = max tail length
    has some tail as a prefix.
    """
    if poly_is_zero(a):
        raise ValueError("arrow source must be nonzero")
    tails = _meet_tails(a, (poly_meet(a, b) for b in B))
    if () in tails:
        return True
    if not tails:
        return False
    depth = max(len(t) for t in tails)
    return prefix_covers_depth(tails, a.n, depth)


def is_cover(a, A):
    """A finite subset of the lower set of a that every nonzero element below a meets."""
    A = list(A)
    if not all(poly_leq(s, a) for s in A):
        return False
    return lenz_arrow(a, A)


# ---------------------------------------------------------------------------
# literals

def format_poly(s):
    if poly_is_zero(s):
        return "0"
    if s.x == ():
        return format_word(s.y, s.n)  # covers "1" when y is empty too
    if s.y == ():
        return "%s^-1" % format_word(s.x, s.n)
    return "%s.%s^-1" % (format_word(s.y, s.n), format_word(s.x, s.n))


def parse_poly(text, n):
    text = text.strip()
    if text == "0":
        return poly_zero(n)
    m = re.fullmatch(r"(.+?)\.(.+?)\^-1", text)
    if m:
        return poly(n, parse_word(m.group(1), n).letters, parse_word(m.group(2), n).letters)
    m = re.fullmatch(r"(.+?)\^-1", text)
    if m:
        return poly(n, (), parse_word(m.group(1), n).letters)
    return poly(n, parse_word(text, n).letters, ())


# ---------------------------------------------------------------------------
# r-fold matrix variant: nonzero elements (i | m | j) with roots i, j in 1..r

def ext(n, r, i, m, j):
    if poly_is_zero(m):
        raise ValueError("use ext_zero for the zero element")
    if not (1 <= i <= r and 1 <= j <= r):
        raise ValueError("roots (%r, %r) out of range 1..%d" % (i, j, r))
    if m.n != n:
        raise ValueError("alphabet mismatch")
    return ExtPolyElement(n, r, i, m, j)


def ext_zero(n, r):
    return ExtPolyElement(n, r, 0, poly_zero(n), 0)


def ext_is_zero(s):
    return s.i == 0


def ext_of_poly(m, r=1, i=1, j=1):
    if poly_is_zero(m):
        return ext_zero(m.n, r)
    return ext(m.n, r, i, m, j)


def _check_ext(s, t):
    if s.n != t.n or s.r != t.r:
        raise ValueError("parameter mismatch: (%d,%d) vs (%d,%d)" % (s.n, s.r, t.n, t.r))


def ext_mul(s, t):
    _check_ext(s, t)
    if ext_is_zero(s) or ext_is_zero(t):
        return ext_zero(s.n, s.r)
    if s.j != t.i:
        return ext_zero(s.n, s.r)
    m = poly_mul(s.m, t.m)
    if poly_is_zero(m):
        return ext_zero(s.n, s.r)
    return ExtPolyElement(s.n, s.r, s.i, m, t.j)


def ext_inv(s):
    if ext_is_zero(s):
        return s
    return ExtPolyElement(s.n, s.r, s.j, poly_inv(s.m), s.i)


def ext_is_idempotent(s):
    return ext_is_zero(s) or (s.i == s.j and poly_is_idempotent(s.m))


def ext_dom(s):
    if ext_is_zero(s):
        return s
    return ExtPolyElement(s.n, s.r, s.j, poly_dom(s.m), s.j)


def ext_ran(s):
    if ext_is_zero(s):
        return s
    return ExtPolyElement(s.n, s.r, s.i, poly_ran(s.m), s.i)


def ext_leq(s, t):
    _check_ext(s, t)
    if ext_is_zero(s):
        return True
    if ext_is_zero(t):
        return False
    return s.i == t.i and s.j == t.j and poly_leq(s.m, t.m)


def ext_meet(s, t):
    _check_ext(s, t)
    if ext_leq(s, t):
        return s
    if ext_leq(t, s):
        return t
    return ext_zero(s.n, s.r)


def ext_compatible(s, t):
    return ext_is_idempotent(ext_mul(ext_inv(s), t)) and ext_is_idempotent(
        ext_mul(s, ext_inv(t))
    )


def ext_orthogonal(s, t):
    return ext_is_zero(ext_mul(ext_inv(s), t)) and ext_is_zero(ext_mul(s, ext_inv(t)))


def ext_lenz_arrow(a, B):
    if ext_is_zero(a):
        raise ValueError("arrow source must be nonzero")
    tails = set()
    for b in B:
        m = ext_meet(a, b)
        if not ext_is_zero(m):
            tails.add(m.m.x[len(a.m.x):])
    if () in tails:
        return True
    if not tails:
        return False
    depth = max(len(t) for t in tails)
    return prefix_covers_depth(tails, a.n, depth)


def format_ext(s):
    if ext_is_zero(s):
        return "0"
    return "(%d|%s,%s|%d)" % (
        s.i,
        format_word(s.m.y, s.n),
        format_word(s.m.x, s.n),
        s.j,
    )


def parse_ext(text, n, r):
    text = text.strip()
    if text == "0":
        return ext_zero(n, r)
    m = re.fullmatch(r"\((\d+)\|([^,|]*),([^,|]*)\|(\d+)\)", text)
    if not m:
        raise ValueError("cannot parse element %r" % (text,))
    i, j = int(m.group(1)), int(m.group(4))
    y = parse_word(m.group(2), n).letters
    x = parse_word(m.group(3), n).letters
    return ext(n, r, i, poly(n, y, x), j)
