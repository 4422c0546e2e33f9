import json

import pytest

from spinchain import (
    Bond,
    ChainSpec,
    DomainError,
    InvalidSpecError,
    ModelParseError,
    PathSpec,
    instantiate_path,
    make_xxx_chain,
    parse_model_file,
    serialize_model,
)


class TestMakeXxxChain:
    def test_n2_doubles_the_single_physical_bond(self):
        spec = make_xxx_chain(2, 1.0, 0.0)
        assert [(b.i, b.j) for b in spec.bonds] == [(0, 1), (1, 0)]
        assert all((b.jx, b.jy, b.jz) == (1.0, 1.0, 1.0) for b in spec.bonds)
        assert spec.hz == (0.0, 0.0)

    def test_n4_ring(self):
        spec = make_xxx_chain(4, 1.0, 0.0)
        assert [(b.i, b.j) for b in spec.bonds] == [(0, 1), (1, 2), (2, 3), (3, 0)]
        assert spec.periodic

    def test_parameter_passthrough(self):
        spec = make_xxx_chain(8, 0.5, 0.5)
        assert len(spec.bonds) == 8
        assert all((b.jx, b.jy, b.jz) == (0.5, 0.5, 0.5) for b in spec.bonds)
        assert spec.hz == (0.5,) * 8

    @pytest.mark.parametrize("n", range(2, 15))
    def test_bond_count_equals_n(self, n):
        assert len(make_xxx_chain(n, 1.0, 0.0).bonds) == n

    @pytest.mark.parametrize("n", [-1, 0, 1])
    def test_too_small_rejected(self, n):
        with pytest.raises(InvalidSpecError):
            make_xxx_chain(n, 1.0, 0.0)


class TestChainSpecValidation:
    def test_self_bond_rejected(self):
        with pytest.raises(InvalidSpecError):
            Bond(1, 1, 1.0, 1.0, 1.0)

    def test_nonfinite_coupling_rejected(self):
        with pytest.raises(InvalidSpecError):
            Bond(0, 1, float("nan"), 1.0, 1.0)

    def test_out_of_range_site_rejected(self):
        with pytest.raises(InvalidSpecError):
            ChainSpec(3, False, (Bond(0, 5, 1.0, 1.0, 1.0),), (0.0,) * 3)

    def test_hz_length_must_match(self):
        with pytest.raises(InvalidSpecError):
            ChainSpec(3, False, (), (0.0, 0.0))

    def test_u1_predicate(self):
        sym = make_xxx_chain(4, 1.0, 0.0)
        assert sym.u1_symmetric
        aniso = ChainSpec(2, False, (Bond(0, 1, 1.0, 0.8, 1.0),), (0.0, 0.0))
        assert not aniso.u1_symmetric


class TestInstantiatePath:
    def test_endpoint_t1(self):
        spec = instantiate_path(make_xxx_chain(4, 1.0, 0.0), PathSpec("xxx_path", 1.0))
        assert all(b.jx == b.jy == b.jz == 0.0 for b in spec.bonds)
        assert spec.hz == (1.0,) * 4

    def test_endpoint_t0(self):
        spec = instantiate_path(make_xxx_chain(4, 1.0, 0.0), PathSpec("xxx_path", 0.0))
        assert all(b.jx == b.jy == b.jz == 1.0 for b in spec.bonds)
        assert spec.hz == (0.0,) * 4

    def test_midpoint(self):
        spec = instantiate_path(make_xxx_chain(4, 1.0, 0.0), PathSpec("xxx_path", 0.5))
        assert all(b.jx == 0.5 for b in spec.bonds)
        assert spec.hz == (0.5,) * 4

    @pytest.mark.parametrize("t", [0.0, 0.125, 0.3, 0.75, 1.0])
    def test_affine_in_t(self, t):
        template = make_xxx_chain(5, 1.0, 0.0)
        at_zero = instantiate_path(template, PathSpec("xxx_path", 0.0))
        at_one = instantiate_path(template, PathSpec("xxx_path", 1.0))
        at_t = instantiate_path(template, PathSpec("xxx_path", t))
        for b0, b1, bt in zip(at_zero.bonds, at_one.bonds, at_t.bonds):
            assert bt.jx == pytest.approx((1 - t) * b0.jx + t * b1.jx, abs=1e-15)
        for h0, h1, ht in zip(at_zero.hz, at_one.hz, at_t.hz):
            assert ht == pytest.approx((1 - t) * h0 + t * h1, abs=1e-15)

    @pytest.mark.parametrize("t", [-0.1, 1.5, None])
    def test_bad_t_rejected(self, t):
        with pytest.raises(DomainError):
            PathSpec("xxx_path", t)

    def test_fixed_mode_is_identity(self):
        template = make_xxx_chain(4, 0.7, 0.2)
        assert instantiate_path(template, PathSpec("fixed")) == template


class TestParseModelFile:
    def test_preset_expands(self):
        spec = parse_model_file('{"preset":"xxx","N":6,"J":1.0,"h":0.0}')
        assert spec == make_xxx_chain(6, 1.0, 0.0)

    def test_explicit_open_chain(self):
        doc = {
            "N": 4,
            "periodic": False,
            "bonds": [
                {"i": 0, "j": 1, "jx": 1.0, "jy": 1.0, "jz": 1.0},
                {"i": 1, "j": 2, "jx": 1.0, "jy": 1.0, "jz": 1.0},
                {"i": 2, "j": 3, "jx": 1.0, "jy": 1.0, "jz": 1.0},
            ],
            "hz": [0.0, 0.0, 0.0, 0.0],
        }
        spec = parse_model_file(json.dumps(doc))
        assert not spec.periodic
        assert len(spec.bonds) == 3

    def test_anisotropic_bond_breaks_u1(self):
        doc = {
            "N": 2,
            "periodic": False,
            "bonds": [{"i": 0, "j": 1, "jx": 1.0, "jy": 0.8, "jz": 1.0}],
            "hz": [0.0, 0.0],
        }
        assert not parse_model_file(json.dumps(doc)).u1_symmetric

    def test_unknown_key_rejected(self):
        with pytest.raises(ModelParseError, match="unknown keys"):
            parse_model_file('{"preset":"xxx","N":6,"J":1.0,"h":0.0,"frob":1}')

    def test_out_of_range_index_rejected(self):
        doc = {
            "N": 3,
            "periodic": False,
            "bonds": [{"i": 0, "j": 7, "jx": 1.0, "jy": 1.0, "jz": 1.0}],
            "hz": [0.0, 0.0, 0.0],
        }
        with pytest.raises(ModelParseError, match=r"bonds\[0\]"):
            parse_model_file(json.dumps(doc))

    def test_nonfinite_rejected(self):
        doc = '{"N":2,"periodic":false,"bonds":[{"i":0,"j":1,"jx":NaN,"jy":1.0,"jz":1.0}],"hz":[0.0,0.0]}'
        with pytest.raises(ModelParseError, match="non-finite"):
            parse_model_file(doc)

    def test_malformed_document_reports_position(self):
        with pytest.raises(ModelParseError, match="line 1"):
            parse_model_file('{"N": 2,,,}')

    def test_boolean_is_not_a_number(self):
        with pytest.raises(ModelParseError):
            parse_model_file('{"preset":"xxx","N":true}')

    def test_missing_key_rejected(self):
        with pytest.raises(ModelParseError, match="missing"):
            parse_model_file('{"N":2,"periodic":false,"bonds":[]}')

    @pytest.mark.parametrize(
        "spec",
        [
            make_xxx_chain(2, 1.0, 0.0),
            make_xxx_chain(7, 0.25, -0.5),
            ChainSpec(
                3,
                False,
                (Bond(0, 2, 0.3, 0.1, -0.7), Bond(1, 2, 1.0, 1.0, 0.0)),
                (0.1, -0.2, 0.3),
            ),
        ],
    )
    def test_round_trip(self, spec):
        assert parse_model_file(json.dumps(serialize_model(spec))) == spec
