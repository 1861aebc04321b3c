import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conceptcx import (
    CategoryStructure,
    ParseError,
    RangeError,
    canonical_form,
    complement,
    enumerate_classes,
    parse_structure,
    symmetry_orbit,
)
from conceptcx.structures import class_id_of, group_order, parse_class_id

from oracles import group_images


@st.composite
def structures(draw, max_dims=4):
    d = draw(st.integers(1, max_dims))
    n = 1 << d
    members = draw(st.sets(st.integers(0, n - 1), min_size=1, max_size=n - 1))
    return CategoryStructure(d, tuple(members))


class TestParse:
    def test_shj_type_i(self):
        s = parse_structure("000,001,010,011", 3)
        assert s.members == (0, 1, 2, 3)
        assert str(s) == "{000,001,010,011}"

    def test_single_member(self):
        s = parse_structure("00", 2)
        assert s.size == 1 and s.dims == 2

    @pytest.mark.parametrize("text", ["{000|001|110|111}", " 000 , 001,110|111 "])
    def test_separators_and_braces(self, text):
        assert parse_structure(text, 3).members == (0, 1, 6, 7)

    def test_duplicate(self):
        with pytest.raises(ParseError, match="duplicate"):
            parse_structure("000,000", 3)

    def test_wrong_length_reports_position(self):
        with pytest.raises(ParseError) as exc:
            parse_structure("000,01,111", 3)
        assert exc.value.position == 2

    def test_non_binary(self):
        with pytest.raises(ParseError):
            parse_structure("002", 3)

    def test_full_set_rejected(self):
        with pytest.raises(RangeError):
            parse_structure("00,01,10,11", 2)

    def test_empty_rejected(self):
        with pytest.raises(ParseError):
            parse_structure("{}", 2)

    @given(structures())
    def test_roundtrip(self, s):
        assert parse_structure(str(s)) == s


class TestOrbit:
    def test_shj_type_i(self, shj):
        assert len(symmetry_orbit(shj["I"])) == 6

    def test_2_1(self):
        orbit = symmetry_orbit(parse_structure("00"))
        assert {str(s) for s in orbit} == {"{00}", "{01}", "{10}", "{11}"}

    def test_shj_type_vi(self, shj):
        orbit = symmetry_orbit(shj["VI"])
        assert orbit == {shj["VI"], complement(shj["VI"])}

    @given(structures())
    @settings(max_examples=60)
    def test_matches_bruteforce(self, s):
        balanced = 2 * s.size == s.n_stimuli
        expected = group_images(set(s.bitstrings()), s.dims, balanced)
        assert {frozenset(t.bitstrings()) for t in symmetry_orbit(s)} == expected

    @given(structures())
    def test_contains_self_and_divides_group_order(self, s):
        orbit = symmetry_orbit(s)
        assert s in orbit
        order = group_order(s.dims) * (2 if 2 * s.size == s.n_stimuli else 1)
        assert order % len(orbit) == 0

    @given(structures(max_dims=3))
    def test_closed(self, s):
        orbit = symmetry_orbit(s)
        for t in orbit:
            assert symmetry_orbit(t) == orbit


class TestCanonical:
    def test_value_flip_to_origin(self):
        assert canonical_form(parse_structure("111")) == parse_structure("000")

    def test_shj_type_i_is_canonical(self, shj):
        assert canonical_form(shj["I"]) == shj["I"]

    def test_up_parity(self):
        assert canonical_form(parse_structure("01,10,11")) == parse_structure("00")

    @given(structures())
    def test_idempotent(self, s):
        c = canonical_form(s)
        assert canonical_form(c) == c
        assert 2 * c.size <= c.n_stimuli

    @given(structures(max_dims=3))
    def test_constant_on_orbit(self, s):
        c = canonical_form(s)
        assert all(canonical_form(t) == c for t in symmetry_orbit(s))

    @given(structures(max_dims=3))
    def test_is_orbit_minimum(self, s):
        up = s if 2 * s.size <= s.n_stimuli else complement(s)
        assert canonical_form(s).members == min(t.members for t in symmetry_orbit(up))


class TestEnumerate:
    @pytest.mark.parametrize("dims,p,count", [
        (2, 1, 1), (2, 2, 2), (3, 1, 1), (3, 2, 3), (3, 3, 3),
        (3, 4, 6), (4, 1, 1), (4, 2, 4), (4, 3, 6), (4, 4, 19),
    ])
    def test_block_sizes(self, dims, p, count):
        assert len(enumerate_classes(dims, p)) == count

    @pytest.mark.parametrize("dims", [1, 2, 3, 4])
    def test_orbit_sizes_sum_to_binomial(self, dims):
        for p in range(1, (1 << dims) // 2 + 1):
            total = sum(len(symmetry_orbit(s)) for s in enumerate_classes(dims, p))
            assert total == math.comb(1 << dims, p)

    @pytest.mark.parametrize("dims", [2, 3])
    def test_classes_partition_all_subsets(self, dims):
        # brute force: canonicalise every subset of size <= half
        for p in range(1, (1 << dims) // 2 + 1):
            seen = {canonical_form(CategoryStructure(dims, c))
                    for c in itertools.combinations(range(1 << dims), p)}
            assert sorted(seen) == enumerate_classes(dims, p)

    def test_shj_block_matches_types(self, shj):
        assert set(enumerate_classes(3, 4)) == {canonical_form(s) for s in shj.values()}
        assert len({canonical_form(s) for s in shj.values()}) == 6

    def test_sorted_and_canonical(self):
        classes = enumerate_classes(4, 4)
        assert classes == sorted(classes)
        assert all(canonical_form(s) == s for s in classes)

    @pytest.mark.parametrize("dims,p", [(3, 0), (3, 5), (0, 1), (9, 1)])
    def test_out_of_range(self, dims, p):
        with pytest.raises(RangeError):
            enumerate_classes(dims, p)


class TestComplement:
    def test_2_1(self):
        assert str(complement(parse_structure("00"))) == "{01,10,11}"

    def test_shj_vi(self, shj):
        assert str(complement(shj["VI"])) == "{001,010,100,111}"

    @given(structures())
    def test_involution(self, s):
        assert complement(complement(s)) == s


class TestClassIds:
    def test_roundtrip(self):
        cid = parse_class_id("4[4]-15")
        assert str(cid) == "4[4]-15"
        assert str(cid.resolve()) == "{0000,0011,0101,1001}"
        assert class_id_of(cid.resolve()) == cid

    def test_index_past_end(self):
        with pytest.raises(RangeError):
            parse_class_id("3[4]-7").resolve()

    @pytest.mark.parametrize("text", ["3[4]", "3[4]-x", "34-1"])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_class_id(text)
