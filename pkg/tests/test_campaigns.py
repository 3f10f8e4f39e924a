import pytest

from ksmooth.campaigns import (
    CampaignConfig,
    cross_validate,
    cube_faces_suite,
    derive_seed,
    face_theorem_suite,
    oracle_suite,
    polar_suite,
    segment_pair_suite,
    vertex_enumeration_suite,
)
from ksmooth.errors import InputError
from ksmooth.geometry import space_linf


def test_config_validation():
    for kwargs in (
        {"count": -1},
        {"denominator_bound": 0},
        {"quantifier_reading": "some"},
        {"strategy": "magic"},
        {"domain": "l1:3"},
        {"domain": "linf4"},
        {"codomain": "linf3"},
        {"strategy": "structural"},
    ):
        with pytest.raises(InputError):
            CampaignConfig(**kwargs)
    cfg = CampaignConfig.from_json({"domain": "linf4", "codomain": "hexagon", "count": 3, "seed": 2})
    assert CampaignConfig.from_json(cfg.as_dict()) == cfg
    with pytest.raises(InputError):
        CampaignConfig.from_json({"count": "3"})
    with pytest.raises(InputError):
        CampaignConfig.from_json({"colour": 1})


def test_seed_derivation_is_index_local():
    assert derive_seed(0, 5) == 5
    assert derive_seed(1, 0) != derive_seed(0, 1)


def test_campaign_table_report():
    rep = cross_validate(CampaignConfig(count=12, seed=3))
    assert rep.passed and not rep.disagreements and not rep.infeasible_hits
    md = rep.to_markdown()
    assert "| S1 | S2 | S3 | condition | k | operators | verified |" in md
    assert "listed infeasible" in md
    d = rep.as_dict()
    assert d["operators"] == 12 and d["passed"]
    assert sum(v["operators"] for v in d["rowStats"].values()) == 12


def test_campaign_workers_match_serial():
    cfg = CampaignConfig(codomain="l1:2", count=8, seed=1)
    serial = [r.as_dict() for r in cross_validate(cfg).records]
    parallel = [r.as_dict() for r in cross_validate(cfg, workers=2).records]
    assert serial == parallel


def test_row_coverage_grows_with_count():
    small = cross_validate(CampaignConfig(count=10, seed=4, with_oracle=False))
    large = cross_validate(CampaignConfig(count=20, seed=4, with_oracle=False))
    assert set(small.rows_reached) <= set(large.rows_reached)
    assert [r.as_dict() for r in large.records[:10]] == [r.as_dict() for r in small.records]


def test_small_suites_pass():
    assert polar_suite(5, 1).passed
    assert vertex_enumeration_suite(5, 1, max_dim=4).passed
    assert cube_faces_suite((2, 3)).checks == 8 + 26
    assert segment_pair_suite(5, 1).passed
    assert oracle_suite(10, 1).passed
    rep = face_theorem_suite([space_linf(2)], 2, 0)
    assert rep.passed and rep.checks == 16
    assert "checks: 16" in rep.to_markdown()
