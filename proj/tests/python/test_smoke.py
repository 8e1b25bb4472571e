import json
import os
import subprocess

import pytest

import bchlab


def test_field_and_version():
    f = bchlab.field(9, 2)
    assert (f["p"], f["s"], f["m"]) == (3, 2, 2)
    assert len(f["prim_poly_qm"]) == 5  # degree s*m over GF(p)
    assert bchlab.version() == bchlab.__version__


def test_cosets_and_dimensions():
    assert bchlab.largest_leaders_half(3, 3) == (7, 4)
    listing = bchlab.coset_leaders(3, 3, 2)
    assert sum(e["size"] for e in listing["leaders"]) == 13
    assert bchlab.dim_closed(3, 3, 2, 4) == 7
    assert bchlab.dim_closed(3, 4, 2, 10) == 18


def test_bch_code():
    code = bchlab.bch_code(3, 3, 2, 4, min_distance=True)
    assert (code["n"], code["k"], code["d_bruteforce"]) == (13, 7, 4)
    assert bchlab.griesmer(13, 3, 9, 3) == "meets"


def test_weights_agree():
    closed = bchlab.weights("C-delta1", 3, 3)
    enum = bchlab.weights("C-delta1", 3, 3, source="enumeration", threads=2)
    assert closed["entries"] == enum["entries"] == {0: 1, 7: 26, 9: 26, 10: 26, 13: 2}
    big = bchlab.weights("V4", 3, 7)
    assert sum(big["entries"].values()) == 3 ** big["k"]


def test_value_distribution():
    assert bchlab.t_distribution(3, 3) == bchlab.t_distribution(3, 3, closed=True)


def test_errors():
    with pytest.raises(bchlab.BchlabError):
        bchlab.weights("V2", 3, 3)
    with pytest.raises(ValueError):
        bchlab.bch_code(3, 3, 2, 1)


def test_claims_subset():
    rows = bchlab.claims(only="AC1")
    assert len(rows) == 6
    assert all(r["status"] == "PASS" for r in rows)


@pytest.mark.skipif(not os.environ.get("BCHLAB_CLI"), reason="CLI binary not provided")
def test_cli_json_matches_bindings(tmp_path):
    out = tmp_path / "w.json"
    subprocess.run(
        [os.environ["BCHLAB_CLI"], "weights", "--family", "C-delta1", "--q", "3", "--m", "3", "--table", "--json", str(out)],
        check=True,
        capture_output=True,
    )
    report = json.loads(out.read_text())
    entries = {w: int(f) for w, f in report["result"]["entries"]}
    assert entries == bchlab.weights("C-delta1", 3, 3)["entries"]
