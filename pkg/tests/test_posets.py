import json

import pytest

from chromsym.graphs import Graph, complete_graph, edgeless_graph, is_claw_free
from chromsym.posets import (
    Poset,
    all_posets,
    count_p_tableaux_hook,
    incomparability_graph,
    parse_poset_text,
    verify_hook_proposition,
)

CHAIN3 = Poset.from_covers(3, [[1, 2], [2, 3]])
ANTICHAIN3 = Poset(3, (0, 0, 0))
# A 3-chain plus one element incomparable to everything: its
# incomparability graph is the claw.
CHAIN_PLUS_FREE = Poset.from_covers(4, [[1, 2], [2, 3]])


def test_from_covers_takes_the_transitive_closure():
    assert CHAIN3.less(1, 3)
    assert not CHAIN3.less(3, 1)
    assert CHAIN3.above == (0b110, 0b100, 0)


def test_from_covers_rejects_cycles():
    with pytest.raises(ValueError, match="cycle"):
        Poset.from_covers(3, [[1, 2], [2, 3], [3, 1]])
    with pytest.raises(ValueError):
        Poset.from_covers(2, [[1, 1]])
    with pytest.raises(ValueError):
        Poset.from_covers(2, [[1, 3]])


def test_constructor_validates_order_axioms():
    with pytest.raises(ValueError, match="itself"):
        Poset(2, (0b01, 0))
    with pytest.raises(ValueError, match="both ways"):
        Poset(2, (0b10, 0b01))
    with pytest.raises(ValueError, match="transitively"):
        Poset(3, (0b010, 0b100, 0))


def test_incomparable():
    assert CHAIN_PLUS_FREE.incomparable(1, 4)
    assert not CHAIN_PLUS_FREE.incomparable(1, 3)
    assert not CHAIN_PLUS_FREE.incomparable(2, 2)


def test_incomparability_graph_examples():
    assert incomparability_graph(CHAIN3) == edgeless_graph(3)
    assert incomparability_graph(ANTICHAIN3) == complete_graph(3)
    one_below_two = Poset.from_covers(3, [[1, 2]])
    assert incomparability_graph(one_below_two) == Graph(3, [(1, 3), (2, 3)])


def test_incomparability_graph_of_chain_plus_free_element_is_a_claw():
    g = incomparability_graph(CHAIN_PLUS_FREE)
    assert g == Graph(4, [(1, 4), (2, 4), (3, 4)])
    assert not is_claw_free(g)


def test_tableau_counts_for_the_3_chain():
    assert count_p_tableaux_hook(CHAIN3, 3) == 1
    assert count_p_tableaux_hook(CHAIN3, 2) == 2
    assert count_p_tableaux_hook(CHAIN3, 1) == 1
    with pytest.raises(ValueError):
        count_p_tableaux_hook(CHAIN3, 4)


def test_tableau_counts_for_the_3_antichain():
    assert count_p_tableaux_hook(ANTICHAIN3, 1) == 6
    assert count_p_tableaux_hook(ANTICHAIN3, 2) == 0
    assert count_p_tableaux_hook(ANTICHAIN3, 3) == 0


def test_tableau_counts_for_chain_plus_free_element():
    counts = [count_p_tableaux_hook(CHAIN_PLUS_FREE, k) for k in (1, 2, 3, 4)]
    assert counts == [8, 5, 1, 0]


def test_mirrored_column_rule_is_ruled_out_by_the_identity():
    # the mirrored reading undercounts shape (2,1,1) on the claw poset
    assert count_p_tableaux_hook(CHAIN_PLUS_FREE, 2, "lower-not-less") == 4
    report = verify_hook_proposition(CHAIN_PLUS_FREE, "lower-not-less")
    assert not report.ok
    with pytest.raises(ValueError):
        count_p_tableaux_hook(CHAIN3, 1, "sideways")


def test_top_arm_counts_chains_covering_everything():
    assert count_p_tableaux_hook(CHAIN3, 3) == 1
    assert count_p_tableaux_hook(ANTICHAIN3, 3) == 0
    assert count_p_tableaux_hook(CHAIN_PLUS_FREE, 4) == 0


def test_verify_hook_proposition_examples():
    report = verify_hook_proposition(CHAIN3)
    assert report.ok
    assert report.per_k == {1: (1, 1), 2: (2, 2), 3: (1, 1)}
    report = verify_hook_proposition(ANTICHAIN3)
    assert report.ok
    assert report.per_k[1] == (6, 6)
    assert verify_hook_proposition(CHAIN_PLUS_FREE).ok


def test_all_posets_counts():
    assert sum(1 for _ in all_posets(1)) == 1
    assert sum(1 for _ in all_posets(2)) == 3
    assert sum(1 for _ in all_posets(3)) == 19
    assert sum(1 for _ in all_posets(4)) == 219


@pytest.mark.parametrize("n", range(1, 5))
def test_hook_proposition_holds_for_every_small_poset(n):
    for poset in all_posets(n):
        assert verify_hook_proposition(poset).ok


def test_some_small_posets_have_clawed_incomparability_graphs():
    flags = [not is_claw_free(incomparability_graph(p)) for p in all_posets(4)]
    assert any(flags)


def test_parse_poset_text():
    poset = parse_poset_text(json.dumps({"n": 3, "covers": [[1, 2], [2, 3]]}))
    assert poset == CHAIN3
    assert parse_poset_text('{"n": 2}') == Poset(2, (0, 0))
    with pytest.raises(ValueError, match="invalid JSON"):
        parse_poset_text("[", source="p.json")
    with pytest.raises(ValueError, match="p.json.*cycle"):
        parse_poset_text('{"n": 2, "covers": [[1, 2], [2, 1]]}', source="p.json")
    with pytest.raises(ValueError, match="'n'"):
        parse_poset_text('{"covers": []}')
