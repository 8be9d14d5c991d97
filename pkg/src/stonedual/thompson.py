"""Exact arithmetic in the Cuntz inverse monoids C_{n,r} and their unit groups.

An element of C_{n,r} is stored as a finite set of pairwise compatible
nonzero extended polycyclic elements over (n, r), read as the join of its
parts.  Normalization discards parts lying under other parts and glues every
complete sibling family, leaving the unique orthogonal form with nothing
left to glue; equality of elements is equality of normal forms, cross-checked
against the arrow test on generating sets.

Units are the elements whose domain and range words form r-rooted maximal
prefix codes.  They are also handled as tree pairs (two codes plus a pairing),
the classical presentation of the Thompson-Higman groups G_{n,r}; reduced
tree pairs and normalized units are two views of the same data, and the
conversion functions are mutually inverse on those.
"""

import itertools
import re
from collections import namedtuple

from . import polycyclic as pc
from .filtercomp import orthogonalize_poly
from .words import (
    RootedWord,
    format_rooted,
    is_rooted_maximal_prefix_code,
    make_rooted,
    parse_rooted,
)

CuntzElement = namedtuple("CuntzElement", ["n", "r", "parts"])
TreePair = namedtuple("TreePair", ["n", "r", "domain", "range", "perm"])


def _part_key(p):
    return (p.i, p.m.y, p.m.x, p.j)


def _check_pair(x, y):
    if (x.n, x.r) != (y.n, y.r):
        raise ValueError(
            "parameter mismatch: (%d,%d) vs (%d,%d)" % (x.n, x.r, y.n, y.r)
        )


# ---------------------------------------------------------------------------
# Cuntz monoid elements


def cuntz(n, r, parts):
    """Build an element from an iterable of parts, dropping zeros.

    The parts are read as a join, so they must be pairwise compatible.
    """
    if n < 2:
        raise ValueError("alphabet size must be >= 2")
    if r < 1:
        raise ValueError("root count must be >= 1")
    kept = []
    for p in parts:
        if not isinstance(p, pc.ExtPolyElement):
            raise TypeError("parts must be extended polycyclic elements")
        if (p.n, p.r) != (n, r):
            raise ValueError(
                "parameter mismatch: (%d,%d) vs (%d,%d)" % (p.n, p.r, n, r)
            )
        if pc.ext_is_zero(p):
            continue
        if p not in kept:
            kept.append(p)
    for a, b in itertools.combinations(kept, 2):
        if not pc.ext_compatible(a, b):
            raise ValueError(
                "parts are not pairwise compatible: %s, %s"
                % (pc.format_ext(a), pc.format_ext(b))
            )
    return CuntzElement(n, r, frozenset(kept))


def cuntz_zero(n, r):
    return cuntz(n, r, [])


def cuntz_one(n, r):
    one = pc.poly_one(n)
    return cuntz(n, r, [pc.ext(n, r, i, one, i) for i in range(1, r + 1)])


def _contract_once(n, r, parts):
    """Glue every complete sibling family in one sweep; report whether any fired.

    A part belongs to at most one family, because the parent words and the
    shared last letter are read off the part itself, so families never overlap
    and one sweep can apply them all.
    """
    fams = {}
    for p in parts:
        if p.m.y and p.m.x and p.m.y[-1] == p.m.x[-1]:
            key = (p.i, p.j, p.m.y[:-1], p.m.x[:-1])
            fams.setdefault(key, set()).add(p.m.y[-1])
    changed = False
    for (i, j, u, v), ks in fams.items():
        if len(ks) < n:
            continue
        for k in range(n):
            parts.remove(pc.ext(n, r, i, pc.poly(n, u + (k,), v + (k,)), j))
        parts.add(pc.ext(n, r, i, pc.poly(n, u, v), j))
        changed = True
    return changed


def cuntz_normalize(x):
    """Rewrite to the normal form: discard parts under other parts, then glue
    complete sibling families until none remain.

    The class of the join is unchanged; both directions are checked with the
    arrow test against the original parts.
    """
    orig = sorted(x.parts, key=_part_key)
    kept = set(orthogonalize_poly(orig))
    while _contract_once(x.n, x.r, kept):
        pass
    # gluing keeps the set orthogonal: a glued part is the join of parts that
    # were orthogonal to everything else, and that survives the join
    for a, b in itertools.combinations(kept, 2):
        assert pc.ext_orthogonal(a, b)
    assert all(pc.ext_lenz_arrow(a, kept) for a in orig)
    assert all(pc.ext_lenz_arrow(b, orig) for b in kept)
    return CuntzElement(x.n, x.r, frozenset(kept))


def cuntz_mul(x, y):
    _check_pair(x, y)
    parts = [pc.ext_mul(a, b) for a in x.parts for b in y.parts]
    return cuntz_normalize(cuntz(x.n, x.r, parts))


def cuntz_inv(x):
    return cuntz_normalize(cuntz(x.n, x.r, [pc.ext_inv(a) for a in x.parts]))


def cuntz_meet(x, y):
    _check_pair(x, y)
    parts = [pc.ext_meet(a, b) for a in x.parts for b in y.parts]
    return cuntz_normalize(cuntz(x.n, x.r, parts))


def cuntz_join(x, y):
    _check_pair(x, y)
    return cuntz_normalize(cuntz(x.n, x.r, list(x.parts) + list(y.parts)))


def cuntz_eq(x, y):
    """Equality of the joins, decided on normal forms.

    The normal form is a complete invariant; the arrow test decides equality
    of the generated classes directly and must agree.
    """
    _check_pair(x, y)
    nx = cuntz_normalize(x)
    ny = cuntz_normalize(y)
    same = nx.parts == ny.parts
    fwd = all(pc.ext_lenz_arrow(a, ny.parts) for a in nx.parts)
    bwd = all(pc.ext_lenz_arrow(b, nx.parts) for b in ny.parts)
    assert same == (fwd and bwd)
    return same


def _domain_code(x):
    return [make_rooted(p.j, p.m.x, x.r, x.n) for p in x.parts]


def _range_code(x):
    return [make_rooted(p.i, p.m.y, x.r, x.n) for p in x.parts]


def is_unit(x):
    """True iff the domain words and the range words each form an r-rooted
    maximal prefix code: the element then acts on every long enough word."""
    x = cuntz_normalize(x)
    if not x.parts:
        return False
    return is_rooted_maximal_prefix_code(
        _domain_code(x), x.n, x.r
    ) and is_rooted_maximal_prefix_code(_range_code(x), x.n, x.r)


def format_cuntz(x):
    return "{%s}" % ", ".join(
        pc.format_ext(p) for p in sorted(x.parts, key=_part_key)
    )


def parse_cuntz(text, n, r):
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError("cannot parse element %r" % (text,))
    body = text[1:-1].strip()
    if not body:
        return cuntz(n, r, [])
    chunks = re.split(r",\s*(?=\()", body)
    return cuntz(n, r, [pc.parse_ext(c, n, r) for c in chunks])


# ---------------------------------------------------------------------------
# tree pairs


def tree_pair(n, r, domain, range_, perm):
    """Build a tree pair in canonical order: both codes sorted, the pairing
    rewired to match.  Construction does not reduce; tp_reduce does."""
    domain = list(domain)
    range_ = list(range_)
    for w in domain + range_:
        if not isinstance(w, RootedWord):
            raise TypeError("codes must consist of rooted words")
    domain = [make_rooted(w.root, w.letters, r, n) for w in domain]
    range_ = [make_rooted(w.root, w.letters, r, n) for w in range_]
    perm = [int(q) for q in perm]
    k = len(domain)
    if len(range_) != k or len(perm) != k:
        raise ValueError("codes and pairing must have the same size")
    if sorted(perm) != list(range(k)):
        raise ValueError("pairing must be a permutation of 0..%d" % (k - 1))
    if not is_rooted_maximal_prefix_code(domain, n, r):
        raise ValueError("domain code is not an r-rooted maximal prefix code")
    if not is_rooted_maximal_prefix_code(range_, n, r):
        raise ValueError("range code is not an r-rooted maximal prefix code")
    dorder = sorted(range(k), key=lambda p: domain[p])
    rorder = sorted(range(k), key=lambda q: range_[q])
    rpos = {old: new for new, old in enumerate(rorder)}
    return TreePair(
        n,
        r,
        tuple(domain[p] for p in dorder),
        tuple(range_[q] for q in rorder),
        tuple(rpos[perm[p]] for p in dorder),
    )


def tp_identity(n, r):
    roots = [RootedWord(i, ()) for i in range(1, r + 1)]
    return tree_pair(n, r, roots, roots, range(r))


def tp_to_unit(g):
    """The unit with one part per leaf: the leaf's image over the leaf."""
    parts = []
    for p in range(len(g.domain)):
        d = g.domain[p]
        w = g.range[g.perm[p]]
        parts.append(
            pc.ext(g.n, g.r, w.root, pc.poly(g.n, w.letters, d.letters), d.root)
        )
    x = cuntz_normalize(cuntz(g.n, g.r, parts))
    assert is_unit(x)
    return x


def tp_from_unit(x):
    """Read the codes and the pairing off the parts of a normalized unit."""
    x = cuntz_normalize(x)
    if not x.parts or not is_unit(x):
        raise ValueError("not a unit")
    parts = sorted(x.parts, key=_part_key)
    domain = [RootedWord(p.j, p.m.x) for p in parts]
    range_ = [RootedWord(p.i, p.m.y) for p in parts]
    g = tree_pair(x.n, x.r, domain, range_, range(len(parts)))
    # a contractible part family is the same thing as a reducible leaf family
    assert tp_reduce(g) == g
    return g


def _reduce_once(n, pairs):
    """Collapse every sibling family carried letter by letter onto a sibling
    family; families never share a leaf, so one sweep applies them all."""
    fams = {}
    for d, w in pairs.items():
        if d.letters and w.letters and d.letters[-1] == w.letters[-1]:
            key = (d.root, d.letters[:-1], w.root, w.letters[:-1])
            fams.setdefault(key, set()).add(d.letters[-1])
    changed = False
    for (dr, du, wr, wv), ks in fams.items():
        if len(ks) < n:
            continue
        for k in range(n):
            del pairs[RootedWord(dr, du + (k,))]
        pairs[RootedWord(dr, du)] = RootedWord(wr, wv)
        changed = True
    return changed


def tp_reduce(g):
    pairs = {g.domain[p]: g.range[g.perm[p]] for p in range(len(g.perm))}
    while _reduce_once(g.n, pairs):
        pass
    domain = sorted(pairs)
    return tree_pair(
        g.n, g.r, domain, [pairs[d] for d in domain], range(len(domain))
    )


def tp_inv(g):
    k = len(g.perm)
    inv = [0] * k
    for p in range(k):
        inv[g.perm[p]] = p
    return tree_pair(g.n, g.r, g.range, g.domain, inv)


def tp_mul(g, h):
    """Compose, right factor first: the product sends w through h, then g.

    The two middle codes are refined only where they disagree: each h-image
    comparable with a g-leaf contributes one composite leaf.
    """
    _check_pair(g, h)
    pairs = {}
    for p in range(len(h.domain)):
        z = h.range[h.perm[p]]
        for q in range(len(g.domain)):
            w = g.domain[q]
            if z.root != w.root:
                continue
            if w.letters[: len(z.letters)] == z.letters:
                tail = w.letters[len(z.letters):]
                d = RootedWord(h.domain[p].root, h.domain[p].letters + tail)
                img = g.range[g.perm[q]]
            elif z.letters[: len(w.letters)] == w.letters:
                tail = z.letters[len(w.letters):]
                d = h.domain[p]
                img = RootedWord(
                    g.range[g.perm[q]].root, g.range[g.perm[q]].letters + tail
                )
            else:
                continue
            # both codes are prefix codes, so each composite leaf arises once
            assert d not in pairs
            pairs[d] = img
    domain = sorted(pairs)
    out = tree_pair(
        g.n, g.r, domain, [pairs[d] for d in domain], range(len(domain))
    )
    return tp_reduce(out)


def tp_eq(g, h):
    _check_pair(g, h)
    return tp_reduce(g) == tp_reduce(h)


def format_tree_pair(g):
    ds = ",".join(format_rooted(w, g.n, g.r) for w in g.domain)
    rs = ",".join(format_rooted(w, g.n, g.r) for w in g.range)
    ps = ",".join(str(q) for q in g.perm)
    return "{%s}->{%s}:perm=[%s]" % (ds, rs, ps)


def parse_tree_pair(text, n, r):
    m = re.fullmatch(r"\{(.*)\}->\{(.*)\}:perm=\[(.*)\]", text.strip())
    if not m:
        raise ValueError("cannot parse tree pair %r" % (text,))
    domain = [parse_rooted(t, n, r) for t in m.group(1).split(",")]
    range_ = [parse_rooted(t, n, r) for t in m.group(2).split(",")]
    if m.group(3).strip():
        perm = [int(t) for t in m.group(3).split(",")]
    else:
        perm = []
    return tree_pair(n, r, domain, range_, perm)
