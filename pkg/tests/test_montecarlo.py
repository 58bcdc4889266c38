import math

import numpy as np
import pytest

from wordseen.core import BinaryWord, SequencePrefix, is_m_seen, seen_within
from wordseen.exactprob import exact_seen_probability
from wordseen.montecarlo import (
    ChainDemoReport,
    CouplingStage,
    RngConfig,
    admissible_path_exists,
    coupling_F,
    coupling_chain_demo,
    coupling_witness,
    estimate_seen_probability,
    estimate_x_seen_in_y,
    plan_parameter_path,
    red_grid,
    sample_sequence,
)


def test_streams_are_stable():
    a = RngConfig(7).stream(1, 2).random(4)
    b = RngConfig(7).stream(1, 2).random(4)
    c = RngConfig(7).stream(1, 3).random(4)
    assert (a == b).all()
    assert (a != c).any()


def test_estimate_reproducible_and_calibrated():
    w = BinaryWord.alternating(1, 4)
    one = estimate_seen_probability(w, 2, 0.5, 40000, RngConfig(11))
    two = estimate_seen_probability(w, 2, 0.5, 40000, RngConfig(11))
    assert one == two
    exact = float(exact_seen_probability(w, 2))
    assert abs(one.estimate - exact) < 5 * math.sqrt(exact * (1 - exact) / 40000)
    assert one.stderr == pytest.approx(
        math.sqrt(one.estimate * (1 - one.estimate) / 40000))
    assert one.to_json_dict()["word"] == "1010"


def test_cross_estimate_decreases_with_length():
    vals = [estimate_x_seen_in_y(2, 0.5, 0.5, n, 30000, RngConfig(3)).estimate
            for n in (1, 3, 6)]
    assert vals[0] > vals[1] > vals[2]


def test_sample_sequence_density():
    gen = RngConfig(5).stream(0)
    seq = sample_sequence(0.2, 50000, gen)
    assert abs(sum(seq.bits) / 50000 - 0.2) < 0.01


# ---------------------------------------------------------------------------
# red grids
# ---------------------------------------------------------------------------

def test_red_grid_shape_and_exports():
    grid = red_grid("11", "1100")
    assert (grid.rows, grid.cols) == (3, 5)
    assert grid.red[0, 0] and not grid.red[0, 1] and not grid.red[1, 0]
    assert bool(grid.red[1, 1]) and not grid.red[1, 3]
    pbm = grid.to_pbm()
    assert pbm.startswith("P1\n5 3\n")
    csv_text = grid.to_csv()
    assert csv_text.splitlines()[0] == "i,j,red"
    assert f"{0},{0},1" in csv_text


@pytest.mark.parametrize("M", [2, 3])
def test_path_existence_matches_engine(M):
    gen = RngConfig(99).stream(1)
    for _ in range(300):
        n = int(gen.integers(1, 5))
        x = BinaryWord(tuple(int(b) for b in gen.integers(0, 2, n)))
        y = SequencePrefix(tuple(int(b) for b in gen.integers(0, 2, n * M)))
        assert admissible_path_exists(red_grid(x, y), M) == is_m_seen(x, y, M)


# ---------------------------------------------------------------------------
# couplings
# ---------------------------------------------------------------------------

def test_coupling_blocks_by_hand():
    gen = RngConfig(1).stream(0)
    out = coupling_F("1100", 0.5, gen)
    assert out.bits == (1, 0)
    assert coupling_witness("1100", out) == (1, 3)
    with pytest.raises(ValueError):
        coupling_F("110", 0.5, gen)
    with pytest.raises(ValueError):
        coupling_witness("1100", "11")


def test_witness_positions_always_admissible():
    gen = RngConfig(2).stream(0)
    x = sample_sequence(0.6, 400, gen)
    out = coupling_F(x, 0.3, gen)
    positions = coupling_witness(x, out)
    prev = 0
    for k, m in enumerate(positions, start=1):
        assert m in (2 * k - 1, 2 * k)
        assert 1 <= m - prev <= 3
        assert x.bits[m - 1] == out.bits[k - 1]
        prev = m
    assert seen_within(BinaryWord(out.bits), x, 3)


def test_stage_validation():
    CouplingStage(0.5, 0.0, 0.25)
    with pytest.raises(ValueError):
        CouplingStage(0.5, 0.0, 0.1)   # below p^2


def test_parameter_paths_frozen():
    down = plan_parameter_path(0.5, 0.25)
    assert [(s.p_in, s.p_out) for s in down] == [(0.5, 0.25)]
    assert down[0].p1 == 0.0

    up = plan_parameter_path(0.3, 0.7)
    assert len(up) == 2
    assert up[0].p_out == pytest.approx(0.51)
    assert up[0].p1 == pytest.approx(1.0)
    assert up[1].p_out == pytest.approx(0.7)

    far = plan_parameter_path(0.9, 0.1)
    assert [round(s.p_in, 8) for s in far] == [0.9, 0.81, 0.6561, 0.43046721,
                                               0.18530202]
    assert far[-1].p_out == pytest.approx(0.1)

    assert plan_parameter_path(0.4, 0.4) == []


def test_chain_demo_report():
    report = coupling_chain_demo(0.5, 0.25, length=16, samples=50,
                                 rng=RngConfig(21))
    assert isinstance(report, ChainDemoReport)
    assert report.window == 3
    assert report.witness_failures == 0
    assert report.ok
    again = coupling_chain_demo(0.5, 0.25, length=16, samples=50,
                                rng=RngConfig(21))
    assert report == again
    payload = report.to_json_dict()
    assert payload["ok"] is True and payload["window"] == 3
