"""Law definitions.

A check returns True when the instance satisfies the law; anything else is
a violation (a dict is attached to the witness as extra detail).  Slot
kinds are listed in registry.DOMAINS.

Points q of S stand in for ultrafilters, the closed set of a proper filter
F is its kernel set (the intersection of its members) and the closure of a
subset is the subset itself.
"""
from __future__ import annotations

from ..bits import elements, full, iter_bits
from ..derived import (
    derived_set,
    is_idempotent_collection,
    is_translation_invariant,
    product,
)
from ..families import (
    Collection,
    all_filters,
    classify_definitional,
    filters_contained_maximal,
    is_stack,
    maximal_filters_in,
    meet_wedge,
    mesh,
    stacks,
)
from ..kernel import (
    absolute_characterization,
    absolute_piecewise_syndetic,
    absolute_syndetic,
    absolute_thick,
    central_collection,
    check_relative_kernel_membership,
    collectionwise_via_fip,
    collectionwise_via_kernel,
    collectionwise_via_points,
    collectionwise_via_thick,
    fip_rel_ps,
    is_collectionwise_ps,
    is_rel_central,
    is_rel_ps_equiv,
    kernel_ideal_report,
    make_kernel_context,
    relative_kernel,
)
from ..relative import (
    extremal_ultrafilters,
    is_product_filter,
    is_rel_syndetic,
    is_rel_syndetic_definitional,
    is_rel_thick,
    is_rel_thick_definitional,
    kernel_is_subsemigroup,
    preorder_le,
    ps_collection,
    syn_collection,
    syn_via_maximal_filters,
    thick_collection,
    thick_via_maximal_filters,
    union_preimage,
)
from ..semigroup import (
    idempotents,
    minimal_left_ideals,
    smallest_ideal,
    two_sided_ideals,
)
from .registry import Hypothesis as H, Law, register

TRIPLE_SAMPLES = {3: 100_000}


def law(id, group, statement, slots, hypotheses=(), **kw):
    def deco(fn):
        register(Law(id=id, group=group, statement=statement, slots=tuple(slots), check=fn,
                     hypotheses=tuple(hypotheses), **kw))
        return fn
    return deco


def P(n):
    return Collection.powerset(n)


def E(n):
    return Collection.empty(n)


def mm(C):
    return mesh(mesh(C))


def _flags(C):
    # literal scans where they are cheap, bit tricks otherwise
    return classify_definitional(C) if C.n <= 3 else C.flags


def _proper(C):
    return C.flags.proper


def _members(n):
    return range(1 << n)


def _fail(**detail):
    out = {}
    for k, v in detail.items():
        if isinstance(v, Collection):
            v = v.to_json()
        out[k] = v
    return out


# hypotheses shared by the kernel-level laws


def _ctx(S, F, G):
    return make_kernel_context(S, F, G)


F_CONDITION = H("f_condition", lambda S, F, G, *r: _ctx(S, F, G).f_condition)
G_PRODUCT = H("g_product", lambda S, F, G, *r: _ctx(S, F, G).g_product)
F_PRODUCT = H("f_product", lambda S, F, G, *r: _ctx(S, F, G).f_product)
REL_HYPS = (F_CONDITION, G_PRODUCT)
CENTRAL_HYPS = (F_PRODUCT, G_PRODUCT, F_CONDITION)


# ---------------------------------------------------------------- sets


@law("prop-mesh-operator", "sets", "C1 <= C2* iff C2 <= C1*", [("C1", "coll"), ("C2", "coll")])
def _(S, C1, C2):
    return (C1 <= mesh(C2)) == (C2 <= mesh(C1))


@law("cor-mesh-operator-a", "sets", "C <= C**", [("C", "coll")])
def _(S, C):
    return C <= mm(C)


@law("cor-mesh-operator-b", "sets",
     "C1 <= C2 implies C2* <= C1* and C1** <= C2**; empty set in C iff C* is empty; C proper iff C* proper",
     [("C1", "coll"), ("C2", "coll")])
def _(S, C1, C2):
    if C1 <= C2 and not (mesh(C2) <= mesh(C1) and mm(C1) <= mm(C2)):
        return False
    return C1.has_empty_set == mesh(C1).is_empty and _proper(C1) == _proper(mesh(C1))


@law("cor-mesh-operator-c", "sets", "C* = C***; C1 <= C2** iff C1** <= C2**",
     [("C1", "coll"), ("C2", "coll")])
def _(S, C1, C2):
    return mesh(mm(C1)) == mesh(C1) and (C1 <= mm(C2)) == (mm(C1) <= mm(C2))


@law("cor-mesh-operator-d", "sets", "{C : C = C**} = {C* : C a collection}", [], max_n=4)
def _(S):
    n = S.n
    space = range(1 << (1 << n))
    fixed = {m for m in space if mm(Collection(n, m)).mask == m}
    image = {mesh(Collection(n, m)).mask for m in space}
    return fixed == image


@law("cor-mesh-operator-e", "sets",
     "C* is the largest C1 with C <= C1*; empty* = P(S) and P(S)* = empty",
     [("C", "coll"), ("C1", "coll")])
def _(S, C, C1):
    n = S.n
    if not C <= mesh(mesh(C)):
        return False
    if C <= mesh(C1) and not C1 <= mesh(C):
        return False
    return mesh(E(n)) == P(n) and mesh(P(n)) == E(n)


@law("cor-mesh-operator-f", "sets", "(union of Ci)* = intersection of Ci* (empty family: P(S))",
     [("family", "family")])
def _(S, family):
    n = S.n
    union = E(n)
    inter = P(n)
    for C in family:
        union = union | C
        inter = inter & mesh(C)
    return mesh(union) == inter


@law("prop-stack-a", "sets", "C* and C** are stacks, proper iff C is proper", [("C", "coll")])
def _(S, C):
    m1, m2 = mesh(C), mm(C)
    return (_flags(m1).stack and _flags(m2).stack
            and _proper(m1) == _proper(C) and _proper(m2) == _proper(C))


@law("prop-stack-b", "sets", "for a stack F: A in F* iff S\\A not in F",
     [("F", "stack"), ("A", "subset")])
def _(S, F, A):
    return (A in mesh(F)) == ((full(S.n) & ~A) not in F)


@law("prop-stack-c", "sets", "C** = {A : some B in C has B <= A}", [("C", "coll")])
def _(S, C):
    n = S.n
    literal = Collection.from_sets(n, [A for A in _members(n) if any(B & ~A == 0 for B in C)])
    return mm(C) == literal


@law("prop-stack-d", "sets", "C is a stack iff C = C**", [("C", "coll")])
def _(S, C):
    return classify_definitional(C).stack == (C == mm(C))


@law("prop-stack-e", "sets", "for stacks: (intersection of Fi)* = union of Fi* (empty family: P(S))",
     [("family", "stackfamily")])
def _(S, family):
    n = S.n
    inter = P(n)
    union = E(n)
    for F in family:
        inter = inter & F
        union = union | mesh(F)
    return mesh(inter) == union


@law("prop-filter-grill-a", "sets", "a stack F is a filter iff F* is a grill", [("F", "stack")])
def _(S, F):
    return _flags(F).filter == _flags(mesh(F)).grill


FILTER_F = H("filter-F", lambda S, F, *r: F.flags.filter)


@law("prop-filter-grill-b", "sets", "a filter F is proper iff F <= F*", [("F", "stack")], [FILTER_F])
def _(S, F):
    return _proper(F) == (F <= mesh(F))


@law("prop-filter-grill-c", "sets", "a filter F is an ultrafilter iff F = F*", [("F", "stack")], [FILTER_F])
def _(S, F):
    return _flags(F).ultrafilter == (F == mesh(F))


@law("prop-filter-grill-d", "sets", "a filter F is an ultrafilter iff (A in F iff S\\A not in F) for all A",
     [("F", "stack")], [FILTER_F])
def _(S, F):
    u = full(S.n)
    dual = all((A in F) != ((u & ~A) in F) for A in _members(S.n))
    return _flags(F).ultrafilter == dual


@law("prop-filter-grill-e", "sets", "ultrafilters are exactly the maximal proper filters", [], max_n=5)
def _(S):
    n = S.n
    all_stacks = stacks(n)
    ultra = {F.mask for F in all_stacks if F.flags.ultrafilter}
    proper_filters = [F for F in all_stacks if F.flags.filter and F.flags.proper]
    maximal = {F.mask for F in proper_filters
               if not any(G != F and F <= G for G in proper_filters)}
    return ultra == maximal


@law("binop-basic", "sets", "C1 meet C2 = C2 meet C1; {S} is the identity and the empty collection the zero",
     [("C1", "coll"), ("C2", "coll")])
def _(S, C1, C2):
    n = S.n
    return (meet_wedge(C1, C2) == meet_wedge(C2, C1)
            and meet_wedge(Collection.top(n), C1) == C1
            and meet_wedge(E(n), C1) == E(n))


@law("binop-associative", "sets", "(C1 meet C2) meet C3 = C1 meet (C2 meet C3)",
     [("C1", "coll"), ("C2", "coll"), ("C3", "coll")], samples=TRIPLE_SAMPLES)
def _(S, C1, C2, C3):
    return meet_wedge(meet_wedge(C1, C2), C3) == meet_wedge(C1, meet_wedge(C2, C3))


@law("binop-isotone", "sets", "C1 <= C2 implies C meet C1 <= C meet C2 (C2 = C1 | D)",
     [("C", "coll"), ("C1", "coll"), ("D", "coll")], samples=TRIPLE_SAMPLES)
def _(S, C, C1, D):
    return meet_wedge(C, C1) <= meet_wedge(C, C1 | D)


@law("binop-filter-criterion", "sets", "a stack F is a filter iff F meet F <= F", [("F", "stack")])
def _(S, F):
    return _flags(F).filter == (meet_wedge(F, F) <= F)


@law("binop-filter-criterion-nonempty", "sets",
     "a nonempty stack F is a filter iff F meet F <= F", [("F", "stack")],
     [H("nonempty-F", lambda S, F: not F.is_empty)], corrected_from="binop-filter-criterion")
def _(S, F):
    return _flags(F).filter == (meet_wedge(F, F) <= F)


@law("prop-binary-operation", "sets",
     "for a collection C and stacks F1, F2: C meet F1 <= F2 iff F1 <= (C meet F2*)*",
     [("C", "coll"), ("F1", "stack"), ("F2", "stack")], samples=TRIPLE_SAMPLES)
def _(S, C, F1, F2):
    return (meet_wedge(C, F1) <= F2) == (F1 <= mesh(meet_wedge(C, mesh(F2))))


@law("prop-grill-a-i", "sets", "F1 meet F2 is a stack for stacks F1, F2",
     [("F1", "stack"), ("F2", "stack")])
def _(S, F1, F2):
    return _flags(meet_wedge(F1, F2)).stack


@law("prop-grill-a-ii", "sets",
     "F1 meet F2 nonempty iff F1, F2 nonempty; then F1 | F2 <= F1 meet F2",
     [("F1", "stack"), ("F2", "stack")])
def _(S, F1, F2):
    W = meet_wedge(F1, F2)
    both = not F1.is_empty and not F2.is_empty
    if (not W.is_empty) != both:
        return False
    return not both or (F1 | F2) <= W


@law("prop-grill-a-iii", "sets",
     "empty set not in F1 meet F2 iff F1 <= F2* and the empty set is in neither F1 nor F2",
     [("F1", "stack"), ("F2", "stack")])
def _(S, F1, F2):
    lhs = not meet_wedge(F1, F2).has_empty_set
    rhs = F1 <= mesh(F2) and not F1.has_empty_set and not F2.has_empty_set
    return lhs == rhs


@law("prop-grill-a-iii-nonempty", "sets",
     "for nonempty stacks: empty set not in F1 meet F2 iff F1 <= F2* and the empty set is in neither",
     [("F1", "stack"), ("F2", "stack")],
     [H("nonempty-F1-F2", lambda S, F1, F2: not F1.is_empty and not F2.is_empty)],
     corrected_from="prop-grill-a-iii")
def _(S, F1, F2):
    lhs = not meet_wedge(F1, F2).has_empty_set
    rhs = F1 <= mesh(F2) and not F1.has_empty_set and not F2.has_empty_set
    return lhs == rhs


@law("prop-grill-b", "sets",
     "F meet F* is a grill, proper iff F is; F meet F1 <= F iff F meet F* <= F1*",
     [("F", "stack"), ("F1", "stack")])
def _(S, F, F1):
    G = meet_wedge(F, mesh(F))
    if not (_flags(G).grill and _proper(G) == _proper(F)):
        return False
    return (meet_wedge(F, F1) <= F) == (G <= mesh(F1))


@law("grill-example", "sets", "F = {{0},{1},{0,1}} on two points: F* = {S} and F meet F* = F is a grill",
     [], max_n=2)
def _(S):
    if S.n != 2:
        return True
    F = Collection.from_sets(2, [[0], [1], [0, 1]])
    return mesh(F) == Collection.top(2) and meet_wedge(F, mesh(F)) == F and F.flags.grill


@law("maximal-filters-oracle", "sets",
     "maximal proper filters inside a stack C are up(B) for the minimal members B of C",
     [("C", "stack")], max_n=4)
def _(S, C):
    n = S.n
    inside = [F for F in all_filters(n) if F.flags.proper and F <= C]
    brute = sorted(F.mask for F in inside if not any(G != F and F <= G for G in inside))
    return sorted(F.mask for F in maximal_filters_in(C)) == brute


@law("classify-definitional", "sets", "bitwise classification agrees with literal pair scans",
     [("C", "coll")], max_n=4)
def _(S, C):
    return C.flags == classify_definitional(C)


@law("classflags-consistency", "sets",
     "ultrafilter iff filter and grill; ultrafilters are proper; stack iff C = up(C)", [("C", "coll")])
def _(S, C):
    f = C.flags
    return (f.ultrafilter == (f.filter and f.grill) and (not f.ultrafilter or f.proper)
            and f.stack == (C == C.up))


# ---------------------------------------------------------------- semigroups


@law("semigroup-smallest-ideal", "semigroup",
     "K(S) is a two-sided ideal inside every ideal; each minimal left ideal has an idempotent", [])
def _(S):
    K = smallest_ideal(S)
    if S.n <= 6 and not all(K & ~I == 0 for I in two_sided_ideals(S)):
        return False
    return all(idempotents(S, L) for L in minimal_left_ideals(S))


@law("semigroup-preimage-distributes", "semigroup",
     "h^-1(A & B) = h^-1 A & h^-1 B and h^-1(A | B) = h^-1 A | h^-1 B",
     [("h", "elem"), ("A", "subset"), ("B", "subset")])
def _(S, h, A, B):
    p = S.preimage
    return p(h, A & B) == p(h, A) & p(h, B) and p(h, A | B) == p(h, A) | p(h, B)


# ---------------------------------------------------------------- derived sets and products


@law("prop-derived-set-a-i", "derived", "(A1 & A2)'(F) <= A1'(F) & A2'(F) for a stack F",
     [("F", "stack"), ("A1", "subset"), ("A2", "subset")])
def _(S, F, A1, A2):
    return derived_set(S, A1 & A2, F) & ~(derived_set(S, A1, F) & derived_set(S, A2, F)) == 0


@law("prop-derived-set-a-i-equality", "derived", "(A1 & A2)'(F) = A1'(F) & A2'(F) for a filter F",
     [("F", "stack"), ("A1", "subset"), ("A2", "subset")], [FILTER_F])
def _(S, F, A1, A2):
    return derived_set(S, A1 & A2, F) == derived_set(S, A1, F) & derived_set(S, A2, F)


@law("prop-derived-set-a-ii", "derived", "A1'(G) | A2'(G) <= (A1 | A2)'(G) for a stack G",
     [("G", "stack"), ("A1", "subset"), ("A2", "subset")])
def _(S, G, A1, A2):
    return (derived_set(S, A1, G) | derived_set(S, A2, G)) & ~derived_set(S, A1 | A2, G) == 0


@law("prop-derived-set-a-ii-equality", "derived", "A1'(G) | A2'(G) = (A1 | A2)'(G) for a grill G",
     [("G", "stack"), ("A1", "subset"), ("A2", "subset")],
     [H("grill-G", lambda S, G, *r: G.flags.grill)])
def _(S, G, A1, A2):
    return derived_set(S, A1, G) | derived_set(S, A2, G) == derived_set(S, A1 | A2, G)


@law("prop-derived-set-a-iii", "derived", "A -> A'(q) preserves & and | for an ultrafilter q",
     [("q", "ultra"), ("A1", "subset"), ("A2", "subset")])
def _(S, q, A1, A2):
    d1, d2 = derived_set(S, A1, q), derived_set(S, A2, q)
    return derived_set(S, A1 & A2, q) == d1 & d2 and derived_set(S, A1 | A2, q) == d1 | d2


@law("prop-derived-set-a-iv", "derived", "A1'(F) & A2'(G) <= (A1 & A2)'(F meet G) for stacks F, G",
     [("F", "stack"), ("G", "stack"), ("A1", "subset"), ("A2", "subset")])
def _(S, F, G, A1, A2):
    lhs = derived_set(S, A1, F) & derived_set(S, A2, G)
    return lhs & ~derived_set(S, A1 & A2, meet_wedge(F, G)) == 0


@law("prop-derived-set-b-i", "derived", "(S\\A)'(F) = S \\ A'(F*) for a stack F",
     [("F", "stack"), ("A", "subset")])
def _(S, F, A):
    u = full(S.n)
    return derived_set(S, u & ~A, F) == u & ~derived_set(S, A, mesh(F))


@law("prop-derived-set-b-ii", "derived", "(S\\A)'(F) <= S \\ A'(F) for a proper filter F",
     [("F", "stack"), ("A", "subset")],
     [H("proper-filter-F", lambda S, F, A: F.flags.filter and F.flags.proper)])
def _(S, F, A):
    u = full(S.n)
    return derived_set(S, u & ~A, F) & derived_set(S, A, F) == 0


@law("prop-derived-set-b-iii", "derived", "S \\ A'(G) <= (S\\A)'(G) for a proper grill G",
     [("G", "stack"), ("A", "subset")],
     [H("proper-grill-G", lambda S, G, A: G.flags.grill and G.flags.proper)])
def _(S, G, A):
    u = full(S.n)
    return (u & ~derived_set(S, A, G)) & ~derived_set(S, u & ~A, G) == 0


@law("prop-derived-set-b-iv", "derived", "(S\\A)'(q) = S \\ A'(q) and (A\\B)'(q) = A'(q) \\ B'(q)",
     [("q", "ultra"), ("A", "subset"), ("B", "subset")])
def _(S, q, A, B):
    u = full(S.n)
    dA, dB = derived_set(S, A, q), derived_set(S, B, q)
    return derived_set(S, u & ~A, q) == u & ~dA and derived_set(S, A & ~B, q) == dA & ~dB


@law("prop-derived-set-c-i", "derived", "F1 <= F2 implies A'(F1) <= A'(F2) (F2 = F1 | D, every A)",
     [("F1", "coll"), ("D", "coll")])
def _(S, F1, D):
    F2 = F1 | D
    for A in _members(S.n):
        if derived_set(S, A, F1) & ~derived_set(S, A, F2):
            return _fail(A=elements(A))
    return True


@law("prop-derived-set-c-ii", "derived",
     "A'(union Fi) = union A'(Fi) and A'(intersection Fi) = intersection A'(Fi)",
     [("family", "family"), ("A", "subset")])
def _(S, family, A):
    n = S.n
    union, inter = E(n), P(n)
    du, di = 0, full(n)
    for F in family:
        union, inter = union | F, inter & F
        d = derived_set(S, A, F)
        du, di = du | d, di & d
    return derived_set(S, A, union) == du and derived_set(S, A, inter) == di


@law("prop-derived-set-c-iii", "derived", "A1 <= A2 implies A1'(F) <= A2'(F) for a stack F",
     [("F", "stack"), ("A1", "subset"), ("B", "subset")])
def _(S, F, A1, B):
    return derived_set(S, A1, F) & ~derived_set(S, A1 | B, F) == 0


@law("prop-derived-set-d", "derived", "(g^-1 A)'(F) = g^-1(A'(F))",
     [("F", "coll"), ("A", "subset"), ("g", "elem")])
def _(S, F, A, g):
    return derived_set(S, S.preimage(g, A), F) == S.preimage(g, derived_set(S, A, F))


@law("cor-derived-set-a-i", "derived", "A'(G) = {x : A in up(x).G}", [("G", "coll"), ("A", "subset")])
def _(S, G, A):
    n = S.n
    pts = sum(1 << x for x in range(n) if A in product(S, Collection.point(n, x), G))
    return derived_set(S, A, G) == pts


@law("cor-derived-set-a-ii", "derived", "A'(F.G) = (A'(G))'(F) for every A",
     [("F", "coll"), ("G", "coll")])
def _(S, F, G):
    FG = product(S, F, G)
    for A in _members(S.n):
        if derived_set(S, A, FG) != derived_set(S, derived_set(S, A, G), F):
            return _fail(A=elements(A))
    return True


@law("cor-derived-set-a-iii", "derived", "F.(G.H) = (F.G).H",
     [("F", "coll"), ("G", "coll"), ("H", "coll")], samples=TRIPLE_SAMPLES)
def _(S, F, G, Hc):
    return product(S, F, product(S, G, Hc)) == product(S, product(S, F, G), Hc)


@law("cor-derived-set-b", "derived", "F1 <= F2 implies F1.G <= F2.G (F2 = F1 | D)",
     [("F1", "coll"), ("D", "coll"), ("G", "coll")], samples={3: 20_000})
def _(S, F1, D, G):
    return product(S, F1, G) <= product(S, F1 | D, G)


@law("cor-derived-set-c", "derived", "for a stack F, G1 <= G2 implies F.G1 <= F.G2 (G2 = G1 | D)",
     [("F", "stack"), ("G1", "coll"), ("D", "coll")], samples={3: 20_000})
def _(S, F, G1, D):
    return product(S, F, G1) <= product(S, F, G1 | D)


@law("cor-derived-set-d-i", "derived", "F.G is a stack for stacks F, G; proper when both are",
     [("F", "stack"), ("G", "stack")])
def _(S, F, G):
    FG = product(S, F, G)
    if not _flags(FG).stack:
        return False
    return not (_proper(F) and _proper(G)) or _proper(FG)


@law("cor-derived-set-d-ii", "derived", "(F.G)* = F*.G* for stacks F, G",
     [("F", "stack"), ("G", "stack")])
def _(S, F, G):
    return mesh(product(S, F, G)) == product(S, mesh(F), mesh(G))


@law("cor-derived-set-d-iii", "derived",
     "filter.filter is a filter, grill.grill a grill, ultrafilter.ultrafilter an ultrafilter",
     [("F", "stack"), ("G", "stack")])
def _(S, F, G):
    f, g = F.flags, G.flags
    h = _flags(product(S, F, G))
    if f.filter and g.filter and not h.filter:
        return _fail(kind="filter")
    if f.grill and g.grill and not h.grill:
        return _fail(kind="grill")
    if f.ultrafilter and g.ultrafilter and not h.ultrafilter:
        return _fail(kind="ultrafilter")
    return True


@law("cor-derived-set-e-i", "derived", "(F1.G1) meet (F2.G2) <= (F1 meet F2).(G1 meet G2) for stacks",
     [("F1", "stack"), ("F2", "stack"), ("G1", "stack"), ("G2", "stack")], samples={3: 20_000})
def _(S, F1, F2, G1, G2):
    lhs = meet_wedge(product(S, F1, G1), product(S, F2, G2))
    return lhs <= product(S, meet_wedge(F1, F2), meet_wedge(G1, G2))


@law("cor-derived-set-e-ii", "derived", "translation invariant stacks are closed under meet",
     [("F1", "stack"), ("F2", "stack")],
     [H("translation-invariant", lambda S, F1, F2: is_translation_invariant(S, F1)
        and is_translation_invariant(S, F2))])
def _(S, F1, F2):
    return is_translation_invariant(S, meet_wedge(F1, F2))


@law("cor-derived-set-e-iii", "derived", "idempotent stacks are closed under meet",
     [("F1", "stack"), ("F2", "stack")],
     [H("idempotent", lambda S, F1, F2: is_idempotent_collection(S, F1)
        and is_idempotent_collection(S, F2))])
def _(S, F1, F2):
    return is_idempotent_collection(S, meet_wedge(F1, F2))


@law("remark-translation-invariant-idempotent", "derived",
     "translation invariant collections are idempotent", [("C", "coll")],
     [H("translation-invariant", lambda S, C: is_translation_invariant(S, C))])
def _(S, C):
    return is_idempotent_collection(S, C)


@law("remark-translation-invariant-idempotent-with-S", "derived",
     "translation invariant collections containing S are idempotent", [("C", "coll")],
     [H("translation-invariant", lambda S, C: is_translation_invariant(S, C)),
      H("contains-S", lambda S, C: full(S.n) in C)],
     corrected_from="remark-translation-invariant-idempotent")
def _(S, C):
    return is_idempotent_collection(S, C)


@law("product-improper", "derived",
     "empty.G = empty, P(S).G = P(S); F.empty and F.P(S) by the two-case tables", [("C", "coll")])
def _(S, C):
    n = S.n
    e, p = E(n), P(n)
    return (product(S, e, C) == e and product(S, p, C) == p
            and product(S, C, e) == (p if C.has_empty_set else e)
            and product(S, C, p) == (p if full(n) in C else e))


@law("product-principal", "derived", "up(x).up(y) = up(xy)", [("x", "elem"), ("y", "elem")])
def _(S, x, y):
    n = S.n
    return product(S, Collection.point(n, x), Collection.point(n, y)) == Collection.point(n, S.mul(x, y))


# ---------------------------------------------------------------- relative syndetic / thick


@law("prop-assumption-of-stack", "relative",
     "Syn and Thick are unchanged when F or G is replaced by its stack closure",
     [("F", "coll"), ("G", "coll")])
def _(S, F, G):
    Fu, Gu = F.up, G.up
    syn = syn_collection(S, F, G)
    thick = thick_collection(S, F, G)
    if not (syn == syn_collection(S, Fu, G) == syn_collection(S, F, Gu) == syn_collection(S, Fu, Gu)):
        return _fail(part="Syn")
    if not (thick == thick_collection(S, Fu, G) == thick_collection(S, F, Gu)
            == thick_collection(S, Fu, Gu)):
        return _fail(part="Thick")
    return True


@law("prop-relative-syndetic-thick-a", "relative", "Syn(F,G) is a stack, proper when F and G are",
     [("F", "coll"), ("G", "coll")])
def _(S, F, G):
    syn = syn_collection(S, F, G)
    return is_stack(syn) and (not (_proper(F) and _proper(G)) or _proper(syn))


@law("prop-relative-syndetic-thick-b", "relative", "Syn(F,G)* = Thick(F,G)",
     [("F", "coll"), ("G", "coll")])
def _(S, F, G):
    return mesh(syn_collection(S, F, G)) == thick_collection(S, F, G)


@law("syn-improper-table", "relative",
     "Syn(empty,G) = P(S); Syn(P(S),G) = Syn({empty},G) = empty; Syn(F,empty), Syn(F,P(S)) by cases",
     [("C", "coll")])
def _(S, C):
    n = S.n
    e, p = E(n), P(n)
    return (syn_collection(S, e, C) == p
            and syn_collection(S, p, C) == e
            and syn_collection(S, Collection.from_sets(n, [0]), C) == e
            and syn_collection(S, C, e) == (p if C.is_empty else e)
            and syn_collection(S, C, p) == (e if C.has_empty_set else p))


def _thm_a(S, F, G):
    for A in _members(S.n):
        if is_rel_syndetic(S, A, F, G) != syn_via_maximal_filters(S, A, F, G):
            return _fail(A=elements(A), tester=is_rel_syndetic(S, A, F, G))
    return True


def _thm_b(S, F, G):
    for A in _members(S.n):
        if is_rel_thick(S, A, F, G) != thick_via_maximal_filters(S, A, F, G):
            return _fail(A=elements(A), tester=is_rel_thick(S, A, F, G))
    return True


NOT_BOTH_POWERSET = H("not-F-G-both-powerset",
                      lambda S, F, G: not (F == P(S.n) and G == P(S.n)))

law("thm-relative-syndetic-thick-a", "relative",
    "for stacks F, G: A in Syn(F,G) iff A'(H*) in F* for every maximal filter H <= G*",
    [("F", "stack"), ("G", "stack")])(_thm_a)
law("thm-relative-syndetic-thick-b", "relative",
    "for stacks F, G: A in Thick(F,G) iff A'(H) in F for some maximal filter H <= G*",
    [("F", "stack"), ("G", "stack")])(_thm_b)
law("thm-relative-syndetic-thick-a-nondegenerate", "relative",
    "as thm-relative-syndetic-thick-a, excluding F = G = P(S)",
    [("F", "stack"), ("G", "stack")], [NOT_BOTH_POWERSET],
    corrected_from="thm-relative-syndetic-thick-a")(_thm_a)
law("thm-relative-syndetic-thick-b-nondegenerate", "relative",
    "as thm-relative-syndetic-thick-b, excluding F = G = P(S)",
    [("F", "stack"), ("G", "stack")], [NOT_BOTH_POWERSET],
    corrected_from="thm-relative-syndetic-thick-b")(_thm_b)


def _points_of(G):
    # the closed set of a filter: points of its kernel set (empty for P(S))
    return list(iter_bits(G.kernel)) if not G.has_empty_set else []


def _cor_a(S, F, G):
    n = S.n
    mF = mesh(F)
    pts = _points_of(G)
    syn = syn_collection(S, F, G)
    for A in _members(n):
        rhs = all(derived_set(S, A, Collection.point(n, q)) in mF for q in pts)
        if (A in syn) != rhs:
            return _fail(part="points", A=elements(A))
    if syn_collection(S, F, mesh(G)) != product(S, mF, mesh(G)):
        return _fail(part="product")
    return True


def _cor_b(S, F, G):
    n = S.n
    pts = _points_of(G)
    thick = thick_collection(S, F, G)
    for A in _members(n):
        rhs = any(derived_set(S, A, Collection.point(n, q)) in F for q in pts)
        if (A in thick) != rhs:
            return _fail(part="points", A=elements(A))
    if thick_collection(S, F, mesh(G)) != product(S, F, G):
        return _fail(part="product")
    return True


law("cor-relative-syndetic-thick-a", "relative",
    "F stack, G filter: Syn(F,G) = {A : A'(q) in F* for all q in G-bar} and Syn(F,G*) = F*.G*",
    [("F", "stack"), ("G", "filter")])(_cor_a)
law("cor-relative-syndetic-thick-b", "relative",
    "F stack, G filter: Thick(F,G) = {A : A'(q) in F for some q in G-bar} and Thick(F,G*) = F.G",
    [("F", "stack"), ("G", "filter")])(_cor_b)
law("cor-relative-syndetic-thick-a-nondegenerate", "relative",
    "as cor-relative-syndetic-thick-a, excluding F = G = P(S)",
    [("F", "stack"), ("G", "filter")], [NOT_BOTH_POWERSET],
    corrected_from="cor-relative-syndetic-thick-a")(_cor_a)
law("cor-relative-syndetic-thick-b-nondegenerate", "relative",
    "as cor-relative-syndetic-thick-b, excluding F = G = P(S)",
    [("F", "stack"), ("G", "filter")], [NOT_BOTH_POWERSET],
    corrected_from="cor-relative-syndetic-thick-b")(_cor_b)


@law("problem-preorder", "relative", "p <=_F q (F.p <= F.q) is reflexive and transitive for a proper stack F",
     [("F", "pstack"), ("p", "elem"), ("q", "elem"), ("r", "elem")])
def _(S, F, p, q, r):
    if not preorder_le(S, p, p, F):
        return False
    return not (preorder_le(S, p, q, F) and preorder_le(S, q, r, F)) or preorder_le(S, p, r, F)


@law("thm-maximal-elements", "kernel",
     "F proper product filter, q in F-bar with F-bar.q <= F-bar: q is <=_F-maximal in F-bar "
     "iff F-bar.q is a minimal left ideal of F-bar",
     [("F", "pfilter"), ("q", "elem")],
     [H("f_product", lambda S, F, q: is_product_filter(S, F)),
      H("q-in-F-bar", lambda S, F, q: bool(F.kernel >> q & 1)),
      H("F-bar-q-inside-F-bar", lambda S, F, q: S.setmul(F.kernel, 1 << q) & ~F.kernel == 0)],
     max_n=4)
def _(S, F, q):
    fb = F.kernel
    a = bool(extremal_ultrafilters(S, F, F)["maximal"] >> q & 1)
    b = S.setmul(fb, 1 << q) in minimal_left_ideals(S, fb)
    return a == b or _fail(maximal=a, minimal_left_ideal=b)


@law("def-product-filter-kernel", "relative",
     "a proper filter F has F <= Syn(F*,F) iff its kernel set is a subsemigroup", [("F", "pfilter")])
def _(S, F):
    return is_product_filter(S, F) == kernel_is_subsemigroup(S, F)


@law("prop-product-filters", "relative",
     "proper product filters F1 <= F2* have a product filter F1 meet F2",
     [("F1", "pfilter"), ("F2", "pfilter")],
     [H("f1-product", lambda S, F1, F2: is_product_filter(S, F1)),
      H("f2-product", lambda S, F1, F2: is_product_filter(S, F2)),
      H("F1-inside-mesh-F2", lambda S, F1, F2: F1 <= mesh(F2))])
def _(S, F1, F2):
    W = meet_wedge(F1, F2)
    return W.flags.filter and is_product_filter(S, W)


@law("prop-derived-set-relative-syndetic", "relative",
     "F proper stack, G proper filter: A'(q) in Syn(F,G) iff A in Thick(Syn(F,G), q) "
     "iff A in Syn(F, Thick(G,q))",
     [("F", "pstack"), ("G", "pfilter"), ("q", "elem")])
def _(S, F, G, q):
    n = S.n
    pq = Collection.point(n, q)
    syn = syn_collection(S, F, G)
    b = thick_collection(S, syn, pq)
    c = syn_collection(S, F, thick_collection(S, G, pq))
    for A in _members(n):
        a = derived_set(S, A, pq) in syn
        if not (a == (A in b) == (A in c)):
            return _fail(A=elements(A), a=a, b=A in b, c=A in c)
    return True


@law("lemma-derived-set-relative-syndetic-a", "relative",
     "G proper product filter: B in Syn(F,G) implies B'(q) in Syn(F,G) for all q in G-bar",
     [("F", "pstack"), ("G", "pfilter")], [H("g_product", lambda S, F, G: is_product_filter(S, G))])
def _(S, F, G):
    n = S.n
    syn = syn_collection(S, F, G)
    for B in syn:
        for q in iter_bits(G.kernel):
            if derived_set(S, B, Collection.point(n, q)) not in syn:
                return _fail(B=elements(B), q=q)
    return True


@law("lemma-derived-set-relative-syndetic-b", "relative",
     "F <= Syn(F*,G): each C in Thick(F,G) has q in G-bar with C'(q) in Syn(F*,G), hence in Thick(F,G)",
     [("F", "pstack"), ("G", "pfilter")],
     [H("f_condition", lambda S, F, G: F <= syn_collection(S, mesh(F), G))])
def _(S, F, G):
    n = S.n
    syn_dual = syn_collection(S, mesh(F), G)
    thick = thick_collection(S, F, G)
    for C in thick:
        if not any(
            derived_set(S, C, Collection.point(n, q)) in syn_dual
            and derived_set(S, C, Collection.point(n, q)) in thick
            for q in iter_bits(G.kernel)
        ):
            return _fail(C=elements(C))
    return True


@law("filter-condition-inclusion", "relative",
     "proper filters with F <= Syn(F*,G): F <= F.q for every q in G-bar",
     [("F", "pfilter"), ("G", "pfilter")], [F_CONDITION])
def _(S, F, G):
    return all(F <= product(S, F, Collection.point(S.n, q)) for q in iter_bits(G.kernel))


# ---------------------------------------------------------------- relative kernel


@law("thm-relative-piecewise-syndetic", "kernel",
     "A in PS(F,G) iff some q in G-bar, in K(G-bar), in E(K(G-bar)), in E(G-bar) has A'(q) in Syn(F,G)",
     [("F", "pfilter"), ("G", "pfilter")], REL_HYPS, max_n=4)
def _(S, F, G):
    ctx = _ctx(S, F, G)
    for A in _members(S.n):
        r = is_rel_ps_equiv(A, ctx)
        vals = [r[k] for k in "abcde"]
        if len(set(vals)) != 1:
            return _fail(A=elements(A), **{k: r[k] for k in "abcde"})
    return True


@law("cor-relative-piecewise-syndetic", "kernel",
     "A in PS(F,G) iff some choice H(B) within B, W(B) in G gives a family with the f.i.p.",
     [("F", "pfilter"), ("G", "pfilter"), ("A", "subset")], REL_HYPS, max_n=4)
def _(S, F, G, A):
    ctx = _ctx(S, F, G)
    return fip_rel_ps(A, ctx) == (A in ctx.ps)


@law("thm-relative-kernel", "kernel",
     "p in K(F,G) iff p in F-bar.e iff p in F-bar.q.e for all q in G-bar iff A'(e) in Syn(F,G) for all A "
     "containing p (some e in E(K(G-bar)))",
     [("F", "pfilter"), ("G", "pfilter")], REL_HYPS, max_n=4)
def _(S, F, G):
    ctx = _ctx(S, F, G)
    for p in range(S.n):
        r = check_relative_kernel_membership(ctx, p)
        if len(set(r.values())) != 1:
            return _fail(p=p, **r)
    return True


@law("cor-relative-kernel-a", "kernel", "A in PS(F,G) iff A meets K(F,G)",
     [("F", "pfilter"), ("G", "pfilter")], REL_HYPS, max_n=4)
def _(S, F, G):
    ctx = _ctx(S, F, G)
    K = relative_kernel(ctx)
    ps = ctx.ps
    for A in _members(S.n):
        if (A in ps) != bool(A & K):
            return _fail(A=elements(A))
    return True


@law("cor-relative-kernel-b", "kernel", "K(F,G) = {p : up(p) <= PS(F,G)}",
     [("F", "pfilter"), ("G", "pfilter")], REL_HYPS, max_n=4)
def _(S, F, G):
    ctx = _ctx(S, F, G)
    ps = ctx.ps
    pts = sum(1 << p for p in range(S.n) if Collection.point(S.n, p) <= ps)
    return relative_kernel(ctx) == pts


@law("cor-relative-kernel-c", "kernel", "K(G,G) = K(G-bar)", [("G", "pfilter")],
     [H("g_product", lambda S, G: is_product_filter(S, G))], max_n=4)
def _(S, G):
    ctx = _ctx(S, G, G)
    return relative_kernel(ctx) == smallest_ideal(S, G.kernel)


@law("kernel-ideal-probe", "kernel",
     "records whether K(F,G) absorbs F-bar on either side (data only)",
     [("F", "pfilter"), ("G", "pfilter")], REL_HYPS, max_n=4, exploratory=True)
def _(S, F, G):
    r = kernel_ideal_report(_ctx(S, F, G))
    return all(r.values()) or _fail(**r)


# ---------------------------------------------------------------- collectionwise and central

CW_SAMPLES = {4: 10_000}


@law("prop-collectionwise", "collectionwise",
     "collectionwise PS (a) iff the Syn(F, Thick(G,q)) form (c) iff the r.p.q form (d)",
     [("F", "pfilter"), ("G", "pfilter"), ("A", "coll")], samples=CW_SAMPLES, max_n=4)
def _(S, F, G, Ac):
    ctx = _ctx(S, F, G)
    a = is_collectionwise_ps(Ac, ctx)
    c = collectionwise_via_thick(Ac, ctx)
    d = collectionwise_via_points(Ac, ctx)
    return a == c == d or _fail(a=a, c=c, d=d)


@law("prop-collectionwise-fip", "collectionwise",
     "collectionwise PS (a) iff the bounded f.i.p. form (b)",
     [("F", "pfilter"), ("G", "pfilter"), ("A", "coll")], samples=CW_SAMPLES, max_n=4)
def _(S, F, G, Ac):
    ctx = _ctx(S, F, G)
    b = collectionwise_via_fip(Ac, ctx)
    a = is_collectionwise_ps(Ac, ctx)
    return a == b or _fail(a=a, b=b)


@law("thm-collectionwise", "collectionwise",
     "A collectionwise PS iff some p in K(F,G) lies in every member of A",
     [("F", "pfilter"), ("G", "pfilter"), ("A", "coll")], REL_HYPS, samples=CW_SAMPLES, max_n=4)
def _(S, F, G, Ac):
    ctx = _ctx(S, F, G)
    return is_collectionwise_ps(Ac, ctx) == collectionwise_via_kernel(Ac, ctx)


@law("collectionwise-singleton", "collectionwise", "{A} collectionwise PS iff A in PS(F,G)",
     [("F", "pfilter"), ("G", "pfilter"), ("A", "subset")], REL_HYPS, max_n=4)
def _(S, F, G, A):
    ctx = _ctx(S, F, G)
    return is_collectionwise_ps(Collection.from_sets(S.n, [A]), ctx) == (A in ctx.ps)


def _absolute_cw(S, Ac):
    # H(B) = S is optimal: the union over h grows with H
    u = full(S.n)
    from ..kernel import _intersection_closure

    common = u
    for X in _intersection_closure(list(Ac)):
        U = union_preimage(S, u, X)
        for w in range(S.n):
            common &= S.preimage(w, U)
    return bool(common)


@law("cor-collectionwise-b", "collectionwise",
     "collectionwise ({S},{S})-PS iff collectionwise PS (absolute f.i.p. definition)",
     [("A", "coll")], samples=CW_SAMPLES, max_n=4)
def _(S, Ac):
    n = S.n
    top = Collection.top(n)
    return is_collectionwise_ps(Ac, _ctx(S, top, top)) == _absolute_cw(S, Ac)


@law("thm-relative-kernel-has-idempotents", "collectionwise",
     "proper product filters with F <= Syn(F*,G): K(F,G) is a subsemigroup with an idempotent",
     [("F", "pfilter"), ("G", "pfilter")], CENTRAL_HYPS, max_n=4)
def _(S, F, G):
    K = relative_kernel(_ctx(S, F, G))
    closed = S.setmul(K, K) & ~K == 0
    idem = bool(idempotents(S, K))
    return (closed and idem) or _fail(subsemigroup=closed, has_idempotent=idem)


@law("thm-relative-central", "collectionwise",
     "A is (F,G)-central iff A meets E(K(F,G))",
     [("F", "pfilter"), ("G", "pfilter")], CENTRAL_HYPS, max_n=4)
def _(S, F, G):
    ctx = _ctx(S, F, G)
    E_K = idempotents(S, relative_kernel(ctx))
    for A in _members(S.n):
        if is_rel_central(A, ctx) != bool(A & E_K):
            return _fail(A=elements(A))
    return True


@law("cor-relative-central-grill", "collectionwise", "Cen(F,G) is a proper grill",
     [("F", "pfilter"), ("G", "pfilter")], CENTRAL_HYPS, max_n=4)
def _(S, F, G):
    cen = central_collection(_ctx(S, F, G))
    f = cen.flags
    return (f.grill and f.proper) or _fail(grill=f.grill, proper=f.proper)


@law("question-partition-regular", "collectionwise",
     "A1 | A2 central implies A1 or A2 central (no product-filter hypotheses)",
     [("F", "pfilter"), ("G", "pfilter")], max_n=4, exploratory=True)
def _(S, F, G):
    ctx = _ctx(S, F, G)
    cen = central_collection(ctx)
    for A1 in _members(S.n):
        for A2 in _members(S.n):
            if (A1 | A2) in cen and A1 not in cen and A2 not in cen:
                return _fail(A1=elements(A1), A2=elements(A2))
    return True


# ---------------------------------------------------------------- absolute case


@law("thm-characterization-piecewise-syndetic", "absolute",
     "the eight absolute characterizations of piecewise syndetic sets agree", [("A", "subset")])
def _(S, A):
    r = absolute_characterization(S, A)
    return len(set(r.values())) == 1 or _fail(**r)


@law("absolute-matches-relative", "absolute",
     "Syn, Thick and PS relative to ({S},{S}) are the absolute notions", [("A", "subset")])
def _(S, A):
    top = Collection.top(S.n)
    return (is_rel_syndetic(S, A, top, top) == absolute_syndetic(S, A)
            and is_rel_thick(S, A, top, top) == absolute_thick(S, A)
            and (A in ps_collection(S, top, top)) == absolute_piecewise_syndetic(S, A))


# ---------------------------------------------------------------- oracles and self-test


@law("oracle-fast-path", "oracle",
     "the H = B shortcuts agree with scans over every nonempty H within B",
     [("A", "subset"), ("F", "coll"), ("G", "coll")],
     samples={3: 50_000, 4: 20_000, 5: 10_000})
def _(S, A, F, G):
    s1, s2 = is_rel_syndetic(S, A, F, G), is_rel_syndetic_definitional(S, A, F, G)
    t1, t2 = is_rel_thick(S, A, F, G), is_rel_thick_definitional(S, A, F, G)
    return (s1 == s2 and t1 == t2) or _fail(syn=[s1, s2], thick=[t1, t2])


@law("oracle-maximal-filters", "oracle",
     "maximal filters inside G* (P(S) included when G is empty) cover the characterization inputs",
     [("G", "stack")], max_n=4)
def _(S, G):
    n = S.n
    mG = mesh(G)
    inside = [F for F in all_filters(n) if F <= mG]
    brute = sorted(F.mask for F in inside if not any(H2 != F and F <= H2 for H2 in inside))
    return sorted(F.mask for F in filters_contained_maximal(mG)) == brute


@law("selftest-syn-is-filter", "oracle", "Syn(F,G) is always a filter (deliberately false)",
     [("F", "coll"), ("G", "coll")], selftest=True)
def _(S, F, G):
    return syn_collection(S, F, G).flags.filter
