import pytest
import json
import sys

sys.path.append(".")
from frobenius_singularities import cli, groebner
from frobenius_singularities.cli import load_job_spec

PLANE_RING = """
[ring]
p = 5
vars = x, y

[assert]
flags = normal, dim2, derivation_bound
"""


def run_json(tmp_path, argv, name="out.json"):
    out = tmp_path / name
    code = cli.main(argv + ["--quiet", "--out", str(out)])
    return code, json.loads(out.read_text())


def test_load_job_spec():
    job = load_job_spec("fedder_sec3.ring")
    assert job.p == 5
    assert job.ambient.variables == ("u", "v", "y", "z")
    assert job.object_kind("I") == "ideal"
    assert str(job.element("f")) == "y^3*z^4"
    assert job.flags == ()
    job = load_job_spec("ex61", p=7, flags="coprime-order")
    assert "coprime_order" in job.flags and "normal" in job.flags
    omega, saturator = job.divisorial("omega")
    assert str(omega.denominator) == "T^3"
    assert str(saturator) == "U"
    with pytest.raises(ValueError):
        job.divisorial("cover")
    with pytest.raises(FileNotFoundError):
        load_job_spec("no_such_ring")


def test_fedder_exit_codes(tmp_path):
    code, doc = run_json(tmp_path, ["fedder", "--file", "fedder_sec3.ring", "--p", "2"])
    assert code == 0
    assert doc["status"] == "NotFPure"
    assert doc["recheck"] is True
    assert cli.main(["fedder", "--ideal", "M", "--p", "3", "--quiet"]) == 0


def test_fclosure(tmp_path):
    code, doc = run_json(tmp_path, ["fclosure", "--elem", "f", "--ideal", "I", "--p", "5"])
    assert code == 0
    assert doc["status"] == "InFrobeniusClosureAt(1)"
    assert doc["inputs"]["ring"]["p"] == 5
    assert doc["engine"]["bases_computed"] > 0
    # y^q stays outside (z^q) + J
    assert cli.main(["fclosure", "--elem", "y", "--ideal", "z", "--emax", "1", "--quiet"]) == 2


def test_json_is_deterministic(tmp_path):
    argv = ["member", "--elem", "f", "--ideal", "I"]
    run_json(tmp_path, argv, "first.json")
    run_json(tmp_path, argv, "second.json")
    assert (tmp_path / "first.json").read_text() == (tmp_path / "second.json").read_text()
    assert "seconds" not in (tmp_path / "first.json").read_text()


def test_errors_exit_one():
    # tight closure needs the test element asserted in R°
    assert cli.main(["tcwitness", "--elem", "f", "--ideal", "I", "--c", "y", "--quiet"]) == 1
    assert cli.main(["tcwitness", "--elem", "f", "--ideal", "I", "--c", "y", "--assert", "in-r-circ", "--quiet"]) == 2
    assert cli.main(["member", "--elem", "y +", "--ideal", "I", "--quiet"]) == 1
    assert cli.main(["member", "--elem", "w", "--ideal", "I", "--quiet"]) == 1
    assert cli.main(["ainv", "--file", "no_such_ring", "--quiet"]) == 1
    assert cli.main(["divisor", "--quiet"]) == 1
    assert cli.main(["member", "--elem", "f", "--ideal", "I", "--assert", "smooth", "--quiet"]) == 1


def test_budget_exceeded():
    saved = groebner.get_default_budget()
    assert cli.main(["gb", "--file", "ex61.ring", "--budget", "1", "--quiet"]) == 1
    assert groebner.get_default_budget() == saved


def test_ainv(tmp_path):
    code, doc = run_json(tmp_path, ["ainv", "--file", "ex61.ring"])
    assert code == 0
    assert doc["result"]["a_invariant"] == "-1"
    assert doc["hypotheses"] == ["cohen_macaulay"]


def test_divisor_command(tmp_path):
    code, doc = run_json(tmp_path, ["divisor", "--family", "2,5", "--p", "3", "--identity-cases", "50", "--seed", "1"])
    assert code == 0
    assert doc["status"] == "NotFPure"
    assert doc["result"]["a_invariant_sectionring"] == -1
    assert doc["result"]["rounding_identity"] == {"cases": 50, "holds": True}
    assert cli.main(["divisor", "--family", "3,3", "--p", "5", "--quiet"]) == 2


def test_demazure_command(tmp_path):
    code, doc = run_json(tmp_path, ["demazure", "--family", "2,5", "--p", "7", "--nmax", "4"])
    assert code == 0
    assert doc["status"] == "QuotientConfirmed"
    assert doc["result"]["generator_levels"] == [1, 2]
    assert [gg["name"] for gg in doc["result"]["sketch"]["generators"]][:2] == ["b1_0", "A1"]


def test_cover_commands(tmp_path):
    code, doc = run_json(tmp_path, ["cover", "--file", "ex61.ring", "--nmax", "4"])
    assert code == 0
    assert doc["status"] == "Order(3)"
    assert doc["result"]["cover"]["a_of_cover"] == "1/3"
    assert doc["result"]["presentation_check"]["match"] is True
    assert cli.main(["cover", "--file", "ex61.ring", "--nmax", "2", "--quiet"]) == 2
    code, doc = run_json(tmp_path, ["fregular2", "--file", "ex62.ring", "--nmax", "4"])
    assert code == 0
    assert doc["status"] == "NotFRegular"
    assert doc["result"]["deg_u"] == "0"
    assert cli.main(["frational2", "--file", "ex62.ring", "--quiet"]) == 0


def test_gorenstein_omega_fallback(tmp_path):
    ring_file = tmp_path / "plane.ring"
    ring_file.write_text(PLANE_RING)
    code, doc = run_json(tmp_path, ["fregular2", "--file", str(ring_file), "--nmax", "2"])
    assert code == 0
    assert doc["status"] == "FRegular"
    assert doc["result"]["deg_u"] == "2"


@pytest.mark.parametrize("name", ["sec3-fedder", "sec3-family", "ex61", "ex62"])
def test_corpus(name):
    assert cli.main(["corpus", name, "--quiet"]) == 0


def test_corpus_unknown_and_aliases(tmp_path):
    assert cli.main(["corpus", "unknown", "--quiet"]) == 1
    run_json(tmp_path, ["corpus", "ex61"], "spec_name.json")
    run_json(tmp_path, ["corpus", "cover-quartic"], "alias.json")
    assert (tmp_path / "spec_name.json").read_text() == (tmp_path / "alias.json").read_text()


def test_corpus_is_deterministic(tmp_path):
    code, doc = run_json(tmp_path, ["corpus", "sec3-fedder"], "first.json")
    assert code == 0
    assert doc["status"] == "Match"
    run_json(tmp_path, ["corpus", "sec3-fedder"], "second.json")
    assert (tmp_path / "first.json").read_text() == (tmp_path / "second.json").read_text()


def test_corpus_cover_inclusion(tmp_path):
    code, doc = run_json(tmp_path, ["corpus", "ex61"])
    assert code == 0
    assert doc["result"]["results"]["fedder"] == "NotFPure"
    assert doc["result"]["results"]["cover_inclusion"] is True
    code, doc = run_json(tmp_path, ["cover", "--file", "ex61.ring", "--nmax", "4"])
    assert doc["result"]["inclusion_check"]["match"] is True


def test_ring_file_aliases():
    assert load_job_spec("cover_quartic.ring").ambient.variables == load_job_spec("ex61.ring").ambient.variables
    assert load_job_spec("fclosure_gap.ring").p == load_job_spec("fedder_sec3.ring").p
    assert cli.main(["ainv", "--file", "cover_quartic.ring", "--quiet"]) == 0


def test_usage_errors_exit_one():
    assert cli.main(["member", "--elem", "f", "--quiet"]) == 1
    assert cli.main(["no_such_command"]) == 1
    assert cli.main(["fedder", "--p", "five", "--quiet"]) == 1


def test_ideal_commands(tmp_path):
    ring_file = tmp_path / "plane.ring"
    ring_file.write_text(PLANE_RING)
    base = ["--file", str(ring_file)]
    code, doc = run_json(tmp_path, ["colon", "--ideal", "x^2, x*y", "--by", "x"] + base)
    assert code == 0 and doc["status"] == "Computed"
    assert sorted(doc["result"]["generators"]) == ["x", "y"]
    code, doc = run_json(tmp_path, ["saturate", "--ideal", "x^2, x*y", "--elem", "y"] + base)
    assert code == 0 and doc["result"]["generators"] == ["x"]
    code, doc = run_json(tmp_path, ["bracket", "--ideal", "x + y, x*y", "--q", "25"] + base)
    assert code == 0
    assert doc["result"] == {"q": 25, "generators": ["x^25 + y^25", "x^25*y^25"]}
    assert cli.main(["bracket", "--ideal", "x", "--q", "10", "--quiet"] + base) == 1
    code, doc = run_json(tmp_path, ["hilbert", "--ideal", "x*y"] + base)
    assert code == 0
    assert doc["result"]["dimension"] == 1


def test_hilbert_command_on_ring(tmp_path):
    code, doc = run_json(tmp_path, ["hilbert", "--file", "fedder_sec3.ring"])
    assert code == 0
    assert doc["status"] == "Computed"
    assert doc["result"]["dimension"] == 2
