import itertools

import pytest
from hypothesis import given

import bruteforce as bf
from starchi.errors import OracleScaleError
from starchi.generators import gnp, mycielski
from starchi.graph import build_graph, complete_graph, cycle_graph, empty_graph, path_graph, petersen_graph
from starchi.oracles import (
    RamseyCertificate,
    RamseyOutcome,
    chromatic_number_exact,
    clique_number,
    contains_induced_star_forest,
    is_h_free,
    max_clique,
    max_stable_set,
    ramsey_bound,
    ramsey_witness,
)
from starchi.starforest import StarForest
from strategies import graphs, star_forests


# -- cliques and stable sets -------------------------------------------------------

def test_max_clique_examples():
    assert max_clique(complete_graph(5)).to_list() == [0, 1, 2, 3, 4]
    assert max_clique(cycle_graph(5)).to_list() == [0, 1]
    assert max_clique(empty_graph(0)).to_list() == []


def test_petersen_values_match_brute_force():
    p = petersen_graph()
    edges = bf.edge_set(p)
    assert len(max_clique(p)) == bf.clique_number(10, edges) == 2
    assert len(max_stable_set(p)) == bf.alpha(10, edges) == 4


def test_stable_set_examples():
    assert len(max_stable_set(cycle_graph(5))) == 2
    assert max_stable_set(empty_graph(7)).to_list() == list(range(7))


@given(graphs(max_n=11))
def test_max_clique_is_lex_least_maximum(g):
    edges = bf.edge_set(g)
    assert max_clique(g).to_list() == bf.lex_max_clique(g.n, edges)


@given(graphs(max_n=11))
def test_stable_set_is_clique_of_complement(g):
    assert max_stable_set(g) == max_clique(g.complement())
    s = max_stable_set(g).to_list()
    assert bf.is_stable(bf.edge_set(g), s)


@given(graphs(max_n=11))
def test_clique_search_deterministic(g):
    assert max_clique(g) == max_clique(g)
    assert contains_induced_star_forest(g, StarForest([1, 1])) == contains_induced_star_forest(g, StarForest([1, 1]))


# -- chromatic number --------------------------------------------------------------

def test_chromatic_examples():
    assert chromatic_number_exact(cycle_graph(5)) == 3
    assert chromatic_number_exact(complete_graph(4)) == 4
    assert chromatic_number_exact(empty_graph(0)) == 0
    assert chromatic_number_exact(empty_graph(3)) == 1


def test_petersen_chromatic_number_cross_checked():
    p = petersen_graph()
    edges = bf.edge_set(p)
    assert chromatic_number_exact(p) == 3
    assert bf.all_colourings_fail(10, edges, 2)
    assert bf.k_colourable(10, edges, 3)


def test_grotzsch():
    g = mycielski(cycle_graph(5))
    assert g.n == 11 and clique_number(g) == 2
    assert chromatic_number_exact(g) == 4


def test_chromatic_cap():
    with pytest.raises(OracleScaleError, match="oracle scale"):
        chromatic_number_exact(empty_graph(21))
    assert chromatic_number_exact(empty_graph(21), cap=None) == 1


@given(graphs(max_n=9))
def test_chromatic_matches_inclusion_exclusion(g):
    edges = bf.edge_set(g)
    chi = chromatic_number_exact(g)
    assert chi == bf.chromatic_inclusion_exclusion(g.n, edges)
    assert len(max_clique(g)) <= chi <= g.max_degree() + 1 or g.n == 0


# -- star forests -----------------------------------------------------------------

def test_p4_is_2k2_free():
    assert contains_induced_star_forest(path_graph(4), StarForest([1, 1])) is None
    assert bf.contains_star_forest(4, bf.edge_set(path_graph(4)), [1, 1]) is False


def test_p5_contains_2k2():
    emb = contains_induced_star_forest(path_graph(5), StarForest([1, 1]))
    assert emb is not None and emb.is_valid(path_graph(5))
    assert sorted(map(sorted, ([c, *ls] for c, ls in emb.stars))) == [[0, 1], [3, 4]]


def test_empty_pattern_always_present():
    emb = contains_induced_star_forest(cycle_graph(5), StarForest())
    assert emb is not None and emb.stars == ()
    assert not is_h_free(empty_graph(0), StarForest())


def test_is_h_free_examples():
    c5 = cycle_graph(5)
    assert is_h_free(c5, StarForest([3]))
    assert not bf.contains_star_forest(5, bf.edge_set(c5), [3])
    assert not is_h_free(c5, StarForest([2]))
    for n in range(0, 9):
        assert is_h_free(complete_graph(n), StarForest([1, 1]))


@given(graphs(max_n=9), star_forests(max_order=5))
def test_star_forest_search_matches_brute_force(g, h):
    emb = contains_induced_star_forest(g, h)
    assert (emb is not None) == bf.contains_star_forest(g.n, bf.edge_set(g), list(h.stars))
    if emb is not None:
        assert emb.is_valid(g) and emb.pattern() == h


# -- Ramsey ----------------------------------------------------------------------

@pytest.mark.parametrize("omega, k, expected", [(2, 3, 6), (3, 3, 12), (5, 1, 0), (6, 2, 6), (1, 4, 3)])
def test_ramsey_bound_values(omega, k, expected):
    assert ramsey_bound(omega, k) == expected


def test_ramsey_bound_big_integers():
    assert ramsey_bound(10**6, 30) == sum(10 ** (6 * i) for i in range(1, 30))


def test_ramsey_witness_c5():
    out = ramsey_witness(cycle_graph(5), 3)
    assert out.certificate == RamseyCertificate(omega=2, k=3, bound=6, vertex_count=5)
    assert not bf.has_stable(5, bf.edge_set(cycle_graph(5)), 3)
    assert str(out) == "certificate 5 ≤ 6"


def test_ramsey_witness_edgeless():
    out = ramsey_witness(empty_graph(4), 3)
    assert out.stable_set is not None and len(out.stable_set) == 3
    assert out.is_valid(empty_graph(4), 3)


def test_ramsey_witness_tight_clique():
    out = ramsey_witness(complete_graph(6), 2)
    assert out.certificate == RamseyCertificate(6, 2, 6, 6)


def test_ramsey_k1():
    assert ramsey_witness(empty_graph(0), 1).certificate.bound == 0
    assert ramsey_witness(empty_graph(3), 1).stable_set == (0,)


def test_ramsey_witness_falls_back_to_search():
    # Stable triple {3, 4, 5} misses the maximum clique {0, 1, 2}, and every
    # clique vertex sees two of its members.
    g = build_graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (1, 4), (1, 5), (2, 3), (2, 5)])
    assert bf.has_stable(6, bf.edge_set(g), 3)
    out = ramsey_witness(g, 3)
    assert out.route == "search" and out.is_valid(g, 3)


def test_ramsey_outcome_validation_rejects_fakes():
    g = cycle_graph(5)
    assert not RamseyOutcome(stable_set=(0, 1, 3)).is_valid(g, 3)
    assert not RamseyOutcome(certificate=RamseyCertificate(2, 3, 4, 5)).is_valid(g, 3)
    assert not RamseyOutcome().is_valid(g, 3)


def test_ramsey_exhaustive_n5():
    n = 5
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        g = build_graph(n, [p for i, p in enumerate(pairs) if bits >> i & 1])
        for k in (2, 3):
            out = ramsey_witness(g, k)
            assert out.is_valid(g, k)
            assert (out.stable_set is None) == (not bf.has_stable(n, bf.edge_set(g), k))


@given(graphs(max_n=10))
def test_ramsey_consequence(g):
    # |V| < omega^k whenever there is no stable k-set and omega > 1.
    for k in (2, 3, 4):
        out = ramsey_witness(g, k)
        assert out.is_valid(g, k)
        if out.certificate and out.certificate.omega > 1:
            assert g.n < out.certificate.omega**k


def test_oracles_on_gnp_chi_bounds():
    for seed in range(30):
        g = gnp(12, "1/3", seed)
        chi = chromatic_number_exact(g)
        assert clique_number(g) <= chi <= g.max_degree() + 1
