"""Permutation statistics, Bruhat order and pattern containment against
hand values and definition-level re-computations."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewrook.permutations import (
    FORBIDDEN_PATTERNS,
    Permutation,
    all_permutations,
    avoids_forbidden,
    bruhat_interval,
    bruhat_leq,
    contains_pattern,
    descent_number,
    eulerian_gf,
    flip_ud,
    inversions,
    poincare_brute,
    rank_count,
    rotate180,
)
from skewrook.qalgebra import BiPoly, LaurentPoly

P = Permutation.from_text
Q = LaurentPoly.monomial(1)


def perms(max_n):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations(range(1, n + 1))
    ).map(lambda w: Permutation(tuple(w)))


def test_constructor_rejects_non_bijections():
    for bad in [(1, 1), (2, 3), (0, 1), ()]:
        if bad == ():
            Permutation(bad)  # the empty permutation is fine
        else:
            with pytest.raises(ValueError):
                Permutation(bad)


def test_text_forms():
    assert P("35124").word == (3, 5, 1, 2, 4)
    assert P("3 5 1 2 4") == P("35124")
    assert P("35124").to_text() == "35124"
    big = Permutation(tuple(range(1, 11)))
    assert big.to_text() == "1 2 3 4 5 6 7 8 9 10"
    assert Permutation.from_text(big.to_text()) == big
    with pytest.raises(ValueError):
        Permutation.from_text("")
    with pytest.raises(ValueError):
        Permutation.from_text("10")  # compact digits: 1 then 0
    with pytest.raises(ValueError):
        Permutation.from_text("3x1")


def test_inversions_frozen():
    assert inversions(Permutation.identity(5)) == 0
    assert inversions(P("3412")) == 4
    assert inversions(P("35124")) == 5
    assert inversions(P("21")) == 1


@given(perms(7))
def test_inversions_matches_pair_scan(p):
    w = p.word
    n = len(w)
    want = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
    assert inversions(p) == want


def test_rank_count_frozen():
    ident = Permutation.identity(6)
    for i in range(1, 7):
        assert rank_count(ident, i, 1) == i
    assert rank_count(P("3412"), 2, 3) == 2
    with pytest.raises(ValueError):
        rank_count(P("3412"), 0, 1)
    with pytest.raises(ValueError):
        rank_count(P("3412"), 1, 5)


@given(perms(6), st.integers(1, 6))
def test_rank_count_bottom_row(p, j):
    n = p.size
    if j <= n:
        assert rank_count(p, n, j) == n - j + 1


@given(perms(5), st.data())
def test_rank_count_matches_definition(p, data):
    i = data.draw(st.integers(1, p.size))
    j = data.draw(st.integers(1, p.size))
    want = sum(1 for a in range(1, i + 1) if p(a) >= j)
    assert rank_count(p, i, j) == want


def test_bruhat_leq_frozen():
    assert bruhat_leq(P("32154"), P("35124"))
    assert not bruhat_leq(P("4321"), P("4231"))
    assert bruhat_leq(P("4231"), P("4321"))
    with pytest.raises(ValueError):
        bruhat_leq(P("21"), P("321"))


@given(perms(5))
def test_identity_is_minimum(p):
    assert bruhat_leq(Permutation.identity(p.size), p)


@given(perms(5), st.data())
def test_flip_antiautomorphism(p, data):
    r = data.draw(st.permutations(range(1, p.size + 1)).map(lambda w: Permutation(tuple(w))))
    assert bruhat_leq(p, r) == bruhat_leq(flip_ud(r), flip_ud(p))


def test_bruhat_leq_is_transposition_closure():
    # reachability from w by inversion-reducing transpositions, exhaustively
    for n in range(1, 5):
        perms_n = list(all_permutations(n))
        for w in perms_n:
            seen = {w}
            queue = [w]
            while queue:
                cur = queue.pop()
                word = cur.word
                for i in range(n):
                    for j in range(i + 1, n):
                        if word[i] > word[j]:
                            nxt = list(word)
                            nxt[i], nxt[j] = nxt[j], nxt[i]
                            cand = Permutation(tuple(nxt))
                            if cand not in seen:
                                seen.add(cand)
                                queue.append(cand)
            for u in perms_n:
                assert bruhat_leq(u, w) == (u in seen), (u.word, w.word)


def test_interval_frozen():
    ident3 = Permutation.identity(3)
    assert bruhat_interval(ident3, ident3) == {ident3}
    assert bruhat_interval(ident3, P("231")) == {
        P("123"),
        P("132"),
        P("213"),
        P("231"),
    }
    assert len(bruhat_interval(Permutation.identity(4), P("3412"))) == 14


@given(perms(5), st.data())
def test_interval_matches_unpruned_filter(u, data):
    w = data.draw(st.permutations(range(1, u.size + 1)).map(lambda x: Permutation(tuple(x))))
    want = {
        v
        for v in all_permutations(u.size)
        if bruhat_leq(u, v) and bruhat_leq(v, w)
    }
    assert bruhat_interval(u, w) == want


def test_interval_monotone_under_extension():
    ident = Permutation.identity(4)
    for u in all_permutations(4):
        for w in all_permutations(4):
            if bruhat_leq(u, w):
                assert bruhat_interval(ident, u) <= bruhat_interval(ident, w)


def test_poincare_brute_frozen():
    ident = Permutation.identity(4)
    assert poincare_brute(ident, ident) == LaurentPoly.constant(1)
    assert poincare_brute(Permutation.identity(2), P("21")) == 1 + Q
    assert poincare_brute(ident, P("3412")) == 1 + 3 * Q + 5 * Q ** 2 + 4 * Q ** 3 + Q ** 4
    # incomparable pair gives the zero polynomial
    assert poincare_brute(P("21435"), P("32145")).is_zero


@given(perms(5), st.data())
def test_poincare_counts_the_interval(u, data):
    w = data.draw(st.permutations(range(1, u.size + 1)).map(lambda x: Permutation(tuple(x))))
    poly = poincare_brute(u, w)
    assert poly.evaluate_at_one() == len(bruhat_interval(u, w))


def test_pattern_containment_frozen():
    assert contains_pattern(P("4231"), P("4231"))
    assert not contains_pattern(Permutation.identity(6), P("4231"))
    assert contains_pattern(P("35142"), P("231"))
    fig4 = P("687594123")
    for pat in FORBIDDEN_PATTERNS:
        assert not contains_pattern(fig4, pat)
    assert avoids_forbidden(fig4)
    assert not avoids_forbidden(P("4231"))
    assert not avoids_forbidden(P("351624"))


@given(perms(6), st.data())
def test_pattern_containment_matches_subsequence_scan(p, data):
    pat = data.draw(st.sampled_from([P("21"), P("231"), P("4231"), P("35142")]))
    k = pat.size
    want = False
    for idxs in itertools.combinations(range(p.size), k):
        vals = [p.word[i] for i in idxs]
        order = sorted(range(k), key=lambda t: vals[t])
        iso = [0] * k
        for rank, t in enumerate(order, 1):
            iso[t] = rank
        if tuple(iso) == pat.word:
            want = True
            break
    assert contains_pattern(p, pat) == want


def test_find_forbidden_reports_positions():
    hit = P("4231").find_forbidden()
    assert hit is not None
    pattern, positions = hit
    assert pattern == P("4231") and positions == (1, 2, 3, 4)
    assert P("687594123").find_forbidden() is None


@given(perms(7))
def test_find_forbidden_witness_is_order_isomorphic(p):
    hit = p.find_forbidden()
    if hit is None:
        assert avoids_forbidden(p)
        return
    pattern, positions = hit
    assert list(positions) == sorted(positions)
    vals = [p(i) for i in positions]
    k = pattern.size
    order = sorted(range(k), key=lambda t: vals[t])
    iso = [0] * k
    for rank, t in enumerate(order, 1):
        iso[t] = rank
    assert tuple(iso) == pattern.word


def test_flip_and_rotate_frozen():
    assert flip_ud(Permutation.identity(4)) == P("4321")
    assert flip_ud(P("56781234")) == P("43218765")
    assert rotate180(P("2143")) == P("2143")
    assert rotate180(P("35124")) == P("24513")


@given(perms(7))
def test_flip_and_rotate_are_involutions(p):
    assert flip_ud(flip_ud(p)) == p
    assert rotate180(rotate180(p)) == p


@given(perms(7))
def test_flip_formula(p):
    n = p.size
    assert flip_ud(p).word == tuple(p(n - i) for i in range(n))
    assert rotate180(p).word == tuple(n + 1 - p(n - i) for i in range(n))


def test_descent_number_frozen():
    assert descent_number(Permutation.identity(5)) == 0
    assert descent_number(P("54321")) == 4
    assert descent_number(P("3412")) == 1


def test_eulerian_gf_frozen():
    ident = Permutation.identity(3)
    assert eulerian_gf(ident, ident) == BiPoly({0: 1})
    ident2 = Permutation.identity(2)
    assert eulerian_gf(ident2, P("21")) == BiPoly({0: 1, 1: Q})
    # interval {123,132,213,231}: descents/lengths (0,0),(1,1),(1,1),(1,2)
    assert eulerian_gf(ident, P("231")) == BiPoly({0: 1, 1: 2 * Q + Q ** 2})


@given(perms(5))
def test_eulerian_gf_specializations(p):
    ident = Permutation.identity(p.size)
    gf = eulerian_gf(ident, p)
    total = LaurentPoly()
    for _, coeff in gf.items():
        total = total + coeff
    assert total == poincare_brute(ident, p)
