"""Poset core: validation, meets/joins, f-vectors, shadows, intervals."""

import json

import pytest

from latshift import fixtures
from latshift.errors import PosetError
from latshift.poset import TOP, FVector, RankedPoset, load_poset


def brute_meet(p, x, y):
    """Independent meet: enumerate common lower bounds, take the unique maximum."""
    common = [z for z in p.ids if p.leq(z, x) and p.leq(z, y)]
    maxima = [z for z in common if not any(p.lt(z, w) for w in common)]
    assert len(maxima) == 1
    return maxima[0]


def brute_join(p, elems):
    common = [z for z in p.ids if all(p.leq(e, z) for e in elems)]
    if not common:
        return TOP
    minima = [z for z in common if not any(p.lt(w, z) for w in common)]
    assert len(minima) == 1
    return minima[0]


class TestLoad:
    def test_square_document(self):
        doc = fixtures.square().to_doc()
        p = load_poset(json.dumps(doc))
        assert len(p) == 10
        assert p.bottom == "0"

    def test_minimum_only(self):
        p = load_poset({"elements": [{"id": "z", "rank": 0}], "covers": []})
        assert p.f_vector() == FVector((1,))

    def test_two_maximal_lower_bounds_rejected(self):
        # a and b both lie above two incomparable rank-1 elements.
        doc = {
            "elements": [
                {"id": "0", "rank": 0},
                {"id": "u", "rank": 1},
                {"id": "v", "rank": 1},
                {"id": "a", "rank": 2},
                {"id": "b", "rank": 2},
            ],
            "covers": [["0", "u"], ["0", "v"], ["u", "a"], ["v", "a"], ["u", "b"], ["v", "b"]],
        }
        with pytest.raises(PosetError) as err:
            load_poset(doc)
        assert err.value.code == "meet-failure"
        assert "a" in err.value.witnesses and "b" in err.value.witnesses

    def test_parse_error(self):
        with pytest.raises(PosetError) as err:
            load_poset("not json {")
        assert err.value.code == "parse"

    def test_duplicate_id(self):
        doc = {
            "elements": [{"id": "0", "rank": 0}, {"id": "0", "rank": 0}],
            "covers": [],
        }
        with pytest.raises(PosetError) as err:
            load_poset(doc)
        assert err.value.code == "duplicate-id"

    def test_missing_bottom(self):
        doc = {"elements": [{"id": "a", "rank": 1}], "covers": []}
        with pytest.raises(PosetError) as err:
            load_poset(doc)
        assert err.value.code == "bottom"

    def test_two_bottoms(self):
        doc = {
            "elements": [{"id": "a", "rank": 0}, {"id": "b", "rank": 0}],
            "covers": [],
        }
        with pytest.raises(PosetError) as err:
            load_poset(doc)
        assert err.value.code == "bottom"

    def test_cover_rank_step(self):
        doc = {
            "elements": [{"id": "0", "rank": 0}, {"id": "a", "rank": 2}],
            "covers": [["0", "a"]],
        }
        with pytest.raises(PosetError) as err:
            load_poset(doc)
        assert err.value.code == "cover-step"
        assert err.value.witnesses == ("0", "a")

    def test_disconnected_element(self):
        doc = {
            "elements": [{"id": "0", "rank": 0}, {"id": "a", "rank": 1}, {"id": "b", "rank": 2}],
            "covers": [["0", "a"]],
        }
        with pytest.raises(PosetError) as err:
            load_poset(doc)
        assert err.value.code == "meet-failure"

    def test_roundtrip(self):
        p = fixtures.threelines()
        q = load_poset(p.to_doc())
        assert q.ids == p.ids and q.covers == p.covers


class TestMeetJoin:
    def test_threelines_meet(self):
        p = fixtures.threelines()
        assert p.meet("p12", "p13") == "l1"
        assert p.meet("p12", "p13") == brute_meet(p, "p12", "p13")

    def test_meet_with_bottom_and_self(self):
        p = fixtures.square()
        for x in p.ids:
            assert p.meet(x, p.bottom) == p.bottom
            assert p.meet(x, x) == x

    def test_meet_matches_bruteforce_everywhere(self):
        for name in ("square", "3lines", "pencil", "triangle-complex"):
            p = fixtures.get(name)
            for x in p.ids:
                for y in p.ids:
                    assert p.meet(x, y) == brute_meet(p, x, y)

    def test_meet_commutative_associative(self):
        p = fixtures.square()
        for x in p.ids:
            for y in p.ids:
                assert p.meet(x, y) == p.meet(y, x)
                for z in p.ids:
                    assert p.meet(p.meet(x, y), z) == p.meet(x, p.meet(y, z))

    def test_join_threelines(self):
        p = fixtures.threelines()
        assert p.join(["l1", "l2"]) == "p12"
        assert p.join(["l1", "l2", "l3"]) is TOP
        assert p.join(["l1"]) == "l1"

    def test_join_matches_bruteforce(self):
        import itertools

        for name in ("square", "3lines", "pencil"):
            p = fixtures.get(name)
            for k in (1, 2, 3):
                for elems in itertools.combinations(p.ids, k):
                    assert p.join(elems) == brute_join(p, elems)

    def test_join_properties(self):
        p = fixtures.square()
        import itertools

        for elems in itertools.combinations(p.ids, 2):
            j = p.join(elems)
            if j is not TOP:
                assert all(p.leq(e, j) for e in elems)
                for z in p.ids:
                    if p.lt(z, j):
                        assert not all(p.leq(e, z) for e in elems)


class TestFVector:
    def test_square(self):
        assert fixtures.square().f_vector() == FVector((1, 4, 4, 1))

    def test_sum_is_element_count(self):
        for name in ("square", "c4", "3lines", "pencil", "triangle-complex"):
            p = fixtures.get(name)
            assert sum(p.f_vector()) == len(p)

    def test_parse_and_str(self):
        fv = FVector.parse("1,4,8,13")
        assert str(fv) == "1,4,8,13"
        assert fv.at(-1) == 1 and fv.at(2) == 13 and fv.at(9) == 0

    def test_rejects_bad_head(self):
        with pytest.raises(ValueError):
            FVector((2, 1))


class TestUpSetShadowInterval:
    def test_up_set_bottom_is_identity(self):
        p = fixtures.square()
        q = p.up_set(p.bottom)
        assert set(q.ids) == set(p.ids)
        assert set(q.covers) == set(p.covers)

    def test_up_set_threelines(self):
        p = fixtures.threelines()
        q = p.up_set("l1")
        assert set(q.ids) == {"l1", "p12", "p13"}
        assert q.rank("l1") == 0 and q.rank("p12") == 1 and q.rank("p13") == 1

    def test_up_set_square_vertex(self):
        p = fixtures.square()
        q = p.up_set("1")
        assert set(q.ids) == {"1", "12", "14", "1234"}
        assert [q.rank(e) for e in ("1", "12", "14", "1234")] == [0, 1, 1, 2]

    def test_shadow_square(self):
        p = fixtures.square()
        assert p.shadow(2) == {"12", "23", "34", "14"}
        assert p.shadow(0) == {"0"}
        assert p.shadow(5) == frozenset()

    def test_shadow_empty_iff_no_upper_rank(self):
        for name in ("square", "c4", "pencil"):
            p = fixtures.get(name)
            for k in range(p.max_rank + 2):
                empty = len(p.elements_of_rank(k + 1)) == 0
                assert (len(p.shadow(k)) == 0) == empty

    def test_interval(self):
        p = fixtures.square()
        elems, chain = p.interval("0", "12")
        assert elems == {"0", "1", "2", "12"} and not chain
        elems, chain = p.interval("12", "12")
        assert elems == {"12"} and chain
        p3 = fixtures.threelines()
        elems, chain = p3.interval("0", "l1")
        assert elems == {"0", "l1"} and chain

    def test_interval_incomparable(self):
        p = fixtures.square()
        with pytest.raises(PosetError):
            p.interval("12", "34")

    def test_up_set_is_valid_poset(self):
        # validation happens inside from_data; reaching here means meets exist
        p = fixtures.square()
        for e in p.ids:
            q = p.up_set(e)
            assert q.bottom == e
