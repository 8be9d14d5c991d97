"""Finite Stone duality between Boolean inverse meet-semigroup tables and
their ultrafilter groupoids.

In a finite table every ultrafilter is the up-set of a 0-minimal element, so
the ultrafilter groupoid lives on the 0-minimal elements themselves: the
product of two of them is nonzero exactly when their domain and range idempotents
agree, and it is then 0-minimal again.  Local bisections of that groupoid
multiply setwise and recover the table; tightly closed ideals match unions of
connected components; and a table is one of the symmetric inverse monoids
exactly when it is a fundamental 0-simplifying Boolean inverse meet-monoid.
"""

import numpy as np

from . import finitesgp as F
from .finitesgp import TableError, _check_size


# ---------------------------------------------------------------------------
# groupoids

class FiniteGroupoid:
    """A finite groupoid on arrows 0..m-1; identities are a subset of arrows.

    Composition a * b is defined exactly when d(a) = r(b), matching the
    semigroup convention that the right factor acts first."""

    def __init__(self, objects, dom, ran, compose, names=None):
        self.m = m = len(dom)
        self.dom = [int(x) for x in dom]
        self.ran = [int(x) for x in ran]
        self.objects = sorted(int(e) for e in objects)
        self._objset = frozenset(self.objects)
        self.names = list(names) if names is not None else None
        C = np.full((m, m), -1, dtype=np.int32)
        for (a, b), c in compose.items():
            C[a, b] = c
        self.C = C
        diag = self._validate()
        if diag is not None:
            raise TableError(diag)
        inv = []
        for a in range(m):
            cands = [
                b
                for b in range(m)
                if C[a, b] == self.ran[a] and C[b, a] == self.dom[a]
            ]
            if len(cands) != 1:
                raise TableError("arrow %d has %d inverses" % (a, len(cands)))
            inv.append(cands[0])
        self.inv = inv

    def _validate(self):
        m, C = self.m, self.C
        if len(self.ran) != m:
            return "dom and ran must have equal length"
        for e in self.objects:
            if not 0 <= e < m:
                return "object %d out of range" % e
            if self.dom[e] != e or self.ran[e] != e:
                return "object %d is not its own source and target" % e
        for a in range(m):
            if self.dom[a] not in self._objset:
                return "source of arrow %d is not an object" % a
            if self.ran[a] not in self._objset:
                return "target of arrow %d is not an object" % a
        for a in range(m):
            for b in range(m):
                defined = int(C[a, b]) >= 0
                if defined != (self.dom[a] == self.ran[b]):
                    if defined:
                        return "composite %d * %d should be undefined" % (a, b)
                    return "missing composite %d * %d" % (a, b)
                if defined:
                    c = int(C[a, b])
                    if not 0 <= c < m:
                        return "composite %d * %d out of range" % (a, b)
                    if self.dom[c] != self.dom[b] or self.ran[c] != self.ran[a]:
                        return "composite %d * %d has wrong endpoints" % (a, b)
        for a in range(m):
            if C[a, self.dom[a]] != a or C[self.ran[a], a] != a:
                return "identity law fails at arrow %d" % a
        for a in range(m):
            for b in np.flatnonzero(C[a, :] >= 0):
                b = int(b)
                for c in np.flatnonzero(C[b, :] >= 0):
                    c = int(c)
                    if C[C[a, b], c] != C[a, C[b, c]]:
                        return "associativity fails at (%d, %d, %d)" % (a, b, c)
        return None

    def compose(self, a, b):
        """The composite arrow, or None when d(a) != r(b)."""
        v = int(self.C[a, b])
        return None if v < 0 else v

    def inverse(self, a):
        return int(self.inv[a])

    def name(self, a):
        if self.names is not None:
            return self.names[a]
        return "g%d" % a

    def is_principal(self):
        """No nontrivial local groups: d(a) = r(a) forces a to be an identity."""
        return all(
            self.dom[a] != self.ran[a] or a in self._objset for a in range(self.m)
        )

    def components(self):
        """Connected components as sorted arrow lists, each with its objects."""
        parent = list(range(self.m))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in range(self.m):
            for b in (self.dom[a], self.ran[a]):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
        groups = {}
        for a in range(self.m):
            groups.setdefault(find(a), []).append(a)
        return sorted(sorted(g) for g in groups.values())

    # -- serialization ------------------------------------------------------

    def to_text(self):
        lines = ["object %d" % e for e in self.objects]
        for a in range(self.m):
            if a not in self._objset:
                lines.append("arrow %d %d %d" % (a, self.dom[a], self.ran[a]))
        for a in range(self.m):
            for b in range(self.m):
                if self.C[a, b] >= 0:
                    lines.append("compose %d %d %d" % (a, b, int(self.C[a, b])))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        objects, dom, ran, comp = [], {}, {}, {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            try:
                args = [int(x) for x in parts[1:]]
            except ValueError:
                raise TableError("line %d: cannot parse %r" % (lineno, raw))
            if parts[0] == "object" and len(args) == 1:
                e = args[0]
                objects.append(e)
                dom[e] = ran[e] = e
            elif parts[0] == "arrow" and len(args) == 3:
                a = args[0]
                if a in dom:
                    raise TableError("line %d: duplicate arrow %d" % (lineno, a))
                dom[a] = args[1]
                ran[a] = args[2]
            elif parts[0] == "compose" and len(args) == 3:
                comp[(args[0], args[1])] = args[2]
            else:
                raise TableError("line %d: cannot parse %r" % (lineno, raw))
        m = len(dom)
        if sorted(dom) != list(range(m)):
            raise TableError("arrow ids must cover 0..%d exactly" % (m - 1))
        return cls(
            objects,
            [dom[a] for a in range(m)],
            [ran[a] for a in range(m)],
            comp,
        )


def pair_groupoid(k):
    """The groupoid k x k: one arrow (i,j) per ordered pair, sending j to i."""

    def aid(i, j):
        return i * k + j

    objects = [aid(i, i) for i in range(k)]
    dom = [aid(a % k, a % k) for a in range(k * k)]
    ran = [aid(a // k, a // k) for a in range(k * k)]
    comp = {}
    for i in range(k):
        for j in range(k):
            for l in range(k):
                comp[(aid(i, j), aid(j, l))] = aid(i, l)
    names = ["(%d,%d)" % (i, j) for i in range(k) for j in range(k)]
    return FiniteGroupoid(objects, dom, ran, comp, names)


def discrete_groupoid(k):
    """k isolated identities and nothing else."""
    comp = {(e, e): e for e in range(k)}
    names = ["e%d" % e for e in range(k)]
    return FiniteGroupoid(range(k), range(k), range(k), comp, names)


def group_groupoid(table, names=None):
    """A finite group presented as a one-object groupoid.

    table[a][b] is the product; the group axioms are verified by the
    groupoid validation."""
    n = len(table)
    idents = [
        e
        for e in range(n)
        if all(table[e][x] == x and table[x][e] == x for x in range(n))
    ]
    if len(idents) != 1:
        raise TableError("group table needs exactly one identity")
    e = idents[0]
    comp = {(a, b): table[a][b] for a in range(n) for b in range(n)}
    return FiniteGroupoid([e], [e] * n, [e] * n, comp, names)


def disjoint_union(G, H):
    """Two groupoids side by side with no arrows between them."""
    off = G.m
    objects = list(G.objects) + [e + off for e in H.objects]
    dom = list(G.dom) + [x + off for x in H.dom]
    ran = list(G.ran) + [x + off for x in H.ran]
    comp = {}
    for a in range(G.m):
        for b in range(G.m):
            c = G.compose(a, b)
            if c is not None:
                comp[(a, b)] = c
    for a in range(H.m):
        for b in range(H.m):
            c = H.compose(a, b)
            if c is not None:
                comp[(a + off, b + off)] = c + off
    names = ["L:" + G.name(a) for a in range(G.m)]
    names += ["R:" + H.name(a) for a in range(H.m)]
    return FiniteGroupoid(objects, dom, ran, comp, names)


# ---------------------------------------------------------------------------
# from tables to groupoids

def _groupoid_of_minimals(S):
    """The groupoid carried by the 0-minimal elements of any finite table.

    The product of 0-minimal s and t is nonzero exactly when d(s) = r(t),
    because distinct 0-minimal idempotents multiply to zero, and the nonzero
    product is 0-minimal again; so the groupoid needs no Boolean hypothesis.
    Returns the groupoid together with the arrow -> element list."""
    elems = S.zero_minimal()
    pos = {s: i for i, s in enumerate(elems)}
    objects = [pos[s] for s in elems if S.is_idem[s]]
    dom, ran = [], []
    for s in elems:
        d, r = int(S.dom[s]), int(S.ran[s])
        assert d in pos and r in pos, "endpoints of 0-minimal elements are 0-minimal"
        dom.append(pos[d])
        ran.append(pos[r])
    comp = {}
    for s in elems:
        for t in elems:
            p = S.mul(s, t)
            composable = S.dom[s] == S.ran[t]
            assert (p != S.zero) == composable, (
                "0-minimal products must vanish exactly off the composable pairs"
            )
            if composable:
                assert p in pos, "composable 0-minimal products are 0-minimal"
                comp[(pos[s], pos[t])] = pos[p]
    names = [S.name(s) for s in elems]
    return FiniteGroupoid(objects, dom, ran, comp, names), elems


def ultrafilter_groupoid(S):
    """The groupoid of ultrafilters of a finite Boolean inverse meet-semigroup.

    Arrows are the 0-minimal elements standing for their up-set ultrafilters;
    objects are the 0-minimal idempotents.  The up-set closure of the filter
    product is recomputed on every composable pair as a cross-check that the
    table product really is the ultrafilter product."""
    if not F._meet_semigroup(S):
        raise TableError("ultrafilter groupoid needs every meet to exist")
    if not F._boolean(S):
        raise TableError("ultrafilter groupoid needs a Boolean table")
    G, elems = _groupoid_of_minimals(S)
    for s in elems:
        for t in elems:
            if S.dom[s] != S.ran[t]:
                continue
            prods = {S.mul(x, y) for x in S.above(s) for y in S.above(t)}
            closure = set()
            for p in prods:
                closure.update(S.above(p))
            assert closure == set(S.above(S.mul(s, t))), (
                "filter product disagrees with the table product"
            )
    return G


# ---------------------------------------------------------------------------
# from groupoids to tables

def local_bisections(G):
    """All local bisections of a finite groupoid, smallest first.

    A subset is a local bisection when no two members share a source and no
    two share a target; this is the same canonical order the bisection
    semigroup table uses."""
    out = []

    def extend(i, chosen, used_d, used_r):
        if i == G.m:
            out.append(frozenset(chosen))
            _check_size(len(out), "bisection semigroup")
            return
        extend(i + 1, chosen, used_d, used_r)
        d, r = G.dom[i], G.ran[i]
        if d not in used_d and r not in used_r:
            chosen.append(i)
            used_d.add(d)
            used_r.add(r)
            extend(i + 1, chosen, used_d, used_r)
            chosen.pop()
            used_d.discard(d)
            used_r.discard(r)

    extend(0, [], set(), set())
    out.sort(key=lambda A: (len(A), sorted(A)))
    return out


def bisection_semigroup(G):
    """All local bisections of G under setwise product, as a validated table.

    The result is checked to be a Boolean inverse meet-semigroup whose
    natural order is inclusion and whose idempotents are exactly the subsets
    of the object set."""
    sets = local_bisections(G)
    index = {A: i for i, A in enumerate(sets)}
    m = len(sets)
    table = np.zeros((m, m), dtype=np.int32)
    for i, A in enumerate(sets):
        for j, B in enumerate(sets):
            prod = frozenset(
                int(G.C[a, b]) for a in A for b in B if G.dom[a] == G.ran[b]
            )
            assert prod in index, "setwise product escaped the bisections"
            table[i, j] = index[prod]
    zero = index[frozenset()]
    identity = index[frozenset(G.objects)]
    names = ["{" + ",".join(G.name(a) for a in sorted(A)) + "}" for A in sets]
    B = F.MulTable(table, zero, identity, names)
    objset = frozenset(G.objects)
    incl = np.array([[A <= Bs for Bs in sets] for A in sets])
    assert (incl == B._leq).all(), "natural order must be inclusion"
    for i, A in enumerate(sets):
        assert bool(B.is_idem[i]) == (A <= objset), (
            "idempotents must be the object subsets"
        )
    assert F._meet_semigroup(B), "bisections must have all meets"
    assert F._boolean(B), "bisections must form a Boolean table"
    return B


# ---------------------------------------------------------------------------
# the round trip

def duality_roundtrip(S):
    """Check that s -> V_s = {0-minimal t <= s} is an isomorphism onto the
    bisection semigroup of the ultrafilter groupoid.

    Returns (True, phi) where phi[s] is the index of V_s in the bisection
    table, or (False, witness) naming the first failure.  A failure means the
    input was not a Boolean inverse meet-semigroup, and that equivalence is
    asserted both ways."""
    G, elems = _groupoid_of_minimals(S)
    pos = {s: i for i, s in enumerate(elems)}
    sets = local_bisections(G)
    v = [frozenset(pos[t] for t in S.minset(s)) for s in range(S.m)]
    for A in v:
        assert A in set(sets), "each V_s is a local bisection"

    ok, witness = True, None
    for s in range(S.m):
        for t in range(S.m):
            prod = frozenset(
                int(G.C[a, b]) for a in v[s] for b in v[t] if G.dom[a] == G.ran[b]
            )
            if prod != v[S.mul(s, t)]:
                ok = False
                witness = "V_%s V_%s != V_%s" % (
                    S.name(s),
                    S.name(t),
                    S.name(S.mul(s, t)),
                )
                break
        if not ok:
            break
    if ok:
        seen = {}
        for s in range(S.m):
            if v[s] in seen:
                ok = False
                witness = "V_%s = V_%s but the elements differ" % (
                    S.name(seen[v[s]]),
                    S.name(s),
                )
                break
            seen[v[s]] = s
    if ok and len(v) != len(sets):
        missing = next(A for A in sets if A not in set(v))
        ok = False
        witness = "no element has V_s = {%s}" % ",".join(
            G.name(a) for a in sorted(missing)
        )

    boolean = F._meet_semigroup(S) and F._boolean(S)
    assert ok == boolean, "the round trip succeeds exactly on Boolean tables"
    if not ok:
        return False, witness

    index = {A: i for i, A in enumerate(sets)}
    phi = [index[v[s]] for s in range(S.m)]
    B = bisection_semigroup(G)
    arr = np.asarray(phi)
    assert sorted(phi) == list(range(B.m)), "phi must be a bijection"
    assert (arr[S.T] == B.T[arr[:, None], arr[None, :]]).all(), (
        "phi must carry the table product to the bisection product"
    )
    assert phi[S.zero] == B.zero
    return True, phi


# ---------------------------------------------------------------------------
# tightly closed ideals vs invariant subsets

def ideal_correspondence(S):
    """Pair every tightly closed ideal of S with an invariant arrow subset of
    the ultrafilter groupoid, and verify the pairing is an order isomorphism.

    The ideal T goes to O(T), its 0-minimal members; the invariant subset O
    comes back as C(O) = all s whose 0-minimal elements lie in O.  Returns
    the list of (ideal, invariant subset) pairs as frozensets of table
    elements, smallest ideal first."""
    if not F._meet_semigroup(S):
        raise TableError("ideal correspondence needs every meet to exist")
    if not F._boolean(S):
        raise TableError("ideal correspondence needs a Boolean table")
    G, elems = _groupoid_of_minimals(S)
    comps = [frozenset(elems[a] for a in comp) for comp in G.components()]
    invariants = set()
    for bits in range(1 << len(comps)):
        chosen = [comps[i] for i in range(len(comps)) if bits >> i & 1]
        invariants.add(frozenset().union(*chosen) if chosen else frozenset())
    assert len(invariants) == 1 << len(comps)

    ideals = F.tightly_closed_ideals(S)
    minimals = frozenset(elems)

    def come_back(O):
        return frozenset(s for s in range(S.m) if S.minset(s) <= O)

    pairs = []
    for T in ideals:
        O = frozenset(T) & minimals
        assert O in invariants, "O(T) must be a union of components"
        assert come_back(O) == T, "C(O(T)) must recover the ideal"
        pairs.append((T, O))
    for O in invariants:
        T = come_back(O)
        assert T in ideals, "C(O) must be a tightly closed ideal"
        assert frozenset(T) & minimals == O, "O(C(O)) must recover the subset"
    assert len(ideals) == len(invariants)
    for T1, O1 in pairs:
        for T2, O2 in pairs:
            assert (T1 <= T2) == (O1 <= O2), "the pairing must respect order"

    # in a Boolean table, tightly closed = closed under the joins that exist
    for T in F.all_ideals(S):
        by_joins = all(
            S.join(a, b) in T
            for a in T
            for b in T
            if S.compatible(a, b) and S.join(a, b) is not None
        )
        assert by_joins == F.is_tightly_closed_ideal(S, T)
    return pairs


# ---------------------------------------------------------------------------
# the symmetric inverse monoid classifier

def classify_symmetric(S):
    """Recognize the finite symmetric inverse monoids.

    Returns (k, phi) with phi an explicit isomorphism onto the canonical
    I(k) table exactly when S is a Boolean inverse meet-monoid that is
    fundamental and 0-simplifying; otherwise (None, reason) naming the first
    property that fails.  phi[s] is read off the conjugation action of s on
    the atom idempotents."""
    if S.m == 1:
        return None, "zero monoid (0 = 1)"
    if S.find_identity() is None:
        return None, "not a monoid"
    if not F._meet_semigroup(S):
        return None, "not a meet semigroup"
    if not F._boolean(S):
        return None, "not Boolean"
    if not F._fundamental(S):
        return None, "not fundamental"
    if not F.is_zero_simplifying(S):
        return None, "not 0-simplifying"

    atoms = [e for e in S.zero_minimal() if S.is_idem[e]]
    k = len(atoms)
    apos = {e: j for j, e in enumerate(atoms)}
    I = F.symmetric_inverse_monoid(k)
    maps = F._maps_of_partial_injections(k)
    index = {f: i for i, f in enumerate(maps)}
    phi = []
    for s in range(S.m):
        f = [-1] * k
        for j, e in enumerate(atoms):
            c = S.mul(S.mul(s, e), S.inverse(s))
            if c != S.zero:
                assert c in apos, "conjugates of atoms are atoms"
                f[j] = apos[c]
        phi.append(index[tuple(f)])
    arr = np.asarray(phi)
    assert sorted(phi) == list(range(I.m)), "the atom action must be a bijection"
    assert (arr[S.T] == I.T[arr[:, None], arr[None, :]]).all(), (
        "the atom action must be multiplicative"
    )
    assert phi[S.zero] == I.zero and phi[S.find_identity()] == I.find_identity()
    return k, phi


# ---------------------------------------------------------------------------
# the principality criterion

def principal_criterion(S):
    """Whether F^up = F^c for every ultrafilter F of the idempotent part.

    F^c collects the elements whose domain and range lie in F and whose
    conjugation preserves F; it is the largest inverse subsemigroup with
    idempotent part F, and it always contains the up-set of F.  On a finite
    Boolean table the criterion, triviality of the local groups of the
    ultrafilter groupoid, and being fundamental all agree, and that is
    asserted."""
    if not F._meet_semigroup(S):
        raise TableError("principal criterion needs every meet to exist")
    if not F._boolean(S):
        raise TableError("principal criterion needs a Boolean table")
    ok = True
    for e in S.zero_minimal():
        if not S.is_idem[e]:
            continue
        filt = [f for f in S.E if S.leq(e, f)]
        fset = frozenset(filt)
        up = {s for s in range(S.m) if S.leq(e, s)}
        fc = set()
        for s in range(S.m):
            if int(S.dom[s]) not in fset or int(S.ran[s]) not in fset:
                continue
            si = S.inverse(s)
            if all(
                S.mul(S.mul(s, f), si) in fset and S.mul(S.mul(si, f), s) in fset
                for f in filt
            ):
                fc.add(s)
        assert up <= fc, "the up-set of an ultrafilter sits inside F^c"
        assert frozenset(x for x in fc if S.is_idem[x]) == fset, (
            "the idempotent part of F^c is F"
        )
        if up != fc:
            ok = False
    G, _ = _groupoid_of_minimals(S)
    assert ok == G.is_principal(), "criterion must match trivial local groups"
    assert ok == F._fundamental(S), (
        "criterion must match fundamental on finite Boolean tables"
    )
    return ok
