import hashlib
import itertools

import pytest

from starchi.fileio import write_graph6
from starchi.generators import (
    GenSpec,
    SplitMix64,
    blowup,
    clique_union,
    complete_multipartite,
    generate,
    gnp,
    mycielski,
    rejection_h_free,
)
from starchi.graph import complete_graph, cycle_graph, empty_graph, path_graph
from starchi.oracles import chromatic_number_exact, clique_number, is_h_free
from starchi.starforest import StarForest

GNP_30_HALF_42 = "e0633ac7f4b65d3995ad927fcdfb8008a4e191a705dc0f3482df247bc2049d92"


def test_splitmix64_reference_vector():
    # Published outputs of the reference splitmix64.c for seed 1234567.
    rng = SplitMix64(1234567)
    assert [rng.next() for _ in range(5)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
        4593380528125082431,
        16408922859458223821,
    ]


def test_below_is_in_range():
    rng = SplitMix64(5)
    draws = [rng.below(7) for _ in range(500)]
    assert set(draws) == set(range(7))


@pytest.mark.parametrize("seed", [0, 1, 2**64 - 1])
def test_gnp_extremes(seed):
    assert gnp(9, 0, seed) == empty_graph(9)
    assert gnp(9, 1, seed) == complete_graph(9)


def test_gnp_golden_digest():
    g = gnp(30, "1/2", 42)
    assert hashlib.sha256(write_graph6(g).encode()).hexdigest() == GNP_30_HALF_42


def test_gnp_float_and_fraction_agree():
    assert gnp(20, 0.25, 3) == gnp(20, "1/4", 3)
    with pytest.raises(ValueError):
        gnp(5, "3/2", 0)


def test_gnp_density_is_plausible():
    g = gnp(200, "1/4", 11)
    assert abs(g.m / (200 * 199 / 2) - 0.25) < 0.02


def test_clique_union_is_negative_instance_for_2k2():
    g = clique_union([3, 3])
    assert g.m == 6
    assert not is_h_free(g, StarForest([1, 1]))


def test_complete_multipartite():
    g = complete_multipartite([2, 2, 2])
    assert clique_number(g) == 3 and chromatic_number_exact(g) == 3
    assert g.m == 12


def test_blowup():
    g = blowup(path_graph(3), [2, 1, 2])
    assert g.n == 5
    assert clique_number(g) == 3
    assert g.edges() == [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]


def test_grotzsch():
    g = mycielski(cycle_graph(5))
    assert (g.n, g.m) == (11, 20)
    assert clique_number(g) == 2 and chromatic_number_exact(g) == 4


def test_mycielski_increments_chi():
    bases = [g for g in (gnp(6, "1/3", s) for s in range(40)) if g.m and clique_number(g) == 2][:8]
    assert len(bases) == 8
    for base in bases:
        m = mycielski(base)
        assert m.n <= 14
        assert clique_number(m) == 2
        assert chromatic_number_exact(m) == chromatic_number_exact(base) + 1


def test_mycielski_triangle_free_sequence():
    g = cycle_graph(5)
    assert chromatic_number_exact(g) == 3
    g = mycielski(g)
    assert clique_number(g) == 2 and chromatic_number_exact(g) == 4


def test_rejection_postcondition():
    h = StarForest([1, 1])
    g = rejection_h_free(GenSpec("gnp", n=12, p="1/5", seed=1), h, 500)
    assert g is None or is_h_free(g, h)
    g = rejection_h_free(GenSpec("gnp", n=15, p="4/5", seed=1), h, 500)
    assert g is not None and is_h_free(g, h)
    assert rejection_h_free(GenSpec("gnp", n=7, p="1", seed=0), h, 1) == complete_graph(7)


def test_rejection_deterministic_family_tried_once():
    assert rejection_h_free(GenSpec("clique_union", sizes=[2, 2]), StarForest([1, 1]), 50) is None


def test_genspec_json_round_trip_and_determinism():
    spec = GenSpec("rejection_h_free", pattern="2xK2", seed=9, max_tries=50,
                   inner={"family": "gnp", "n": 14, "p": "4/5"})
    again = GenSpec.from_json(spec.to_json())
    assert again == spec
    a, b = generate(spec), generate(again)
    assert a is not None and write_graph6(a) == write_graph6(b)


def test_genspec_nested_base():
    spec = GenSpec("mycielski", base={"family": "gnp", "n": 5, "p": "1/2", "seed": 3})
    assert generate(spec) == mycielski(gnp(5, "1/2", 3))
    spec = GenSpec("blowup", base=write_graph6(cycle_graph(5)), sizes=[1, 2, 1, 2, 1])
    assert generate(spec).n == 7


@pytest.mark.parametrize("bad", [{"family": "nope"}, {"family": "gnp", "bogus": 1}, {"family": "gnp", "seed": -1}])
def test_genspec_validation(bad):
    with pytest.raises(ValueError):
        GenSpec.from_dict(bad)


def test_seed_determinism_across_families():
    for family, kw in [("gnp", {"n": 20, "p": "1/3"}), ("complete_multipartite", {"sizes": [3, 1, 2]})]:
        specs = [GenSpec(family, seed=s, **kw) for s in (1, 1)]
        assert len({write_graph6(generate(s)) for s in specs}) == 1


def test_distinct_seeds_differ():
    graphs = {write_graph6(gnp(15, "1/2", s)) for s in range(20)}
    assert len(graphs) == 20


def test_all_pairs_drawn_in_order():
    # Pair (i, j) consumes draw number i*n - i*(i+1)/2 + (j - i - 1).
    n, seed = 6, 77
    rng = SplitMix64(seed)
    draws = [rng.next() for _ in range(n * (n - 1) // 2)]
    expected = [p for p, r in zip(itertools.combinations(range(n), 2), draws) if r * 3 < 1 << 64]
    assert gnp(n, "1/3", seed).edges() == expected
