import json

import numpy as np
import yaml
from click.testing import CliRunner

from anyonchronos.cli.main import cli, main
from anyonchronos.core.linalg import equatorial_ket


def _invoke(args):
  return CliRunner().invoke(cli, args)


def _report(args, tmp_path):
  out = tmp_path / "report.json"
  result = _invoke(args + ["--output", str(out)])
  assert result.exit_code == 0, result.output
  return json.loads(out.read_text(encoding="utf-8"))


def test_model_show(tmp_path):
  doc = _report(["model", "show"], tmp_path)
  assert doc["schema"] == 1
  assert doc["command"] == "model show"
  assert doc["valid"] is True
  assert doc["model"]["labels"] == ["vac", "sigma", "psi"]
  ising = _report(["model", "show", "--model", "ising"], tmp_path)
  assert ising["model"]["name"] == "Ising"


def test_braid_closure_group_order(tmp_path):
  doc = _report(["braid", "closure", "--model", "su2_2", "--anyons", "3"], tmp_path)
  assert doc["group_order"] == 24
  assert doc["sqrt_paulis"]["Y"]["pair"] == [1, 3]
  assert "elements" not in doc


def test_braid_closure_csv():
  result = _invoke(["braid", "closure", "--anyons", "3", "--format", "csv"])
  assert result.exit_code == 0
  lines = result.output.strip().splitlines()
  assert lines[0].startswith("index,dim,u0_re,u0_im")
  assert len(lines) == 25


def test_braid_eval_bell_pair(tmp_path):
  doc = _report(["braid", "eval", "--anyons", "6", "--on", "00", "s2", "s4", "s3"], tmp_path)
  assert doc["word"] == "s2 s4 s3"
  assert doc["convention"]["bell_pair_word"] == "s2 s4 s3"
  state = np.array([complex(re, im) for re, im in doc["state"]])
  assert abs(np.vdot(np.array([1, 1, 1, -1]) / 2, state)) ** 2 > 1 - 1e-10


def test_braid_eval_rejects_bad_word():
  result = _invoke(["braid", "eval", "--anyons", "3", "s7"])
  assert result.exit_code == 1
  assert "BraidWordError" in result.output


def test_fuse(tmp_path):
  doc = _report(["fuse", "--state", "+", "--pair", "2", "3"], tmp_path)
  assert doc["axis"] == "X"
  probs = {o["charge"]: o["probability"] for o in doc["outcomes"]}
  assert np.isclose(probs["vac"], 1.0)
  assert doc["outcomes"][1]["post_state"] is None


def test_fuse_across_cut_is_a_domain_error():
  result = _invoke(["fuse", "--state", "0,0", "--pair", "3", "4"])
  assert result.exit_code == 1
  assert "ForbiddenFusionError" in result.output


def test_povm_enumerate(tmp_path):
  doc = _report(["povm", "enumerate", "--ancilla", "0"], tmp_path)
  assert doc["n_max"] == 4
  assert len(doc["equatorial_ticks"]) == 4
  assert len(doc["effects"]) == 6
  assert doc["prepared"]["same_effects"] is True


def test_povm_enumerate_guard():
  result = _invoke(["povm", "enumerate", "--ancilla", "3"])
  assert result.exit_code == 1
  assert "ScaleGuardError" in result.output


def test_paw_run_singlet(tmp_path):
  doc = _report(["paw", "run", "--resource", "singlet", "--ticks", "4"], tmp_path)
  assert doc["n_ticks"] == 4
  assert len(doc["ticks"]) == 4
  for tick in doc["ticks"]:
    assert tick["fidelity_vs_schrodinger"] > 1 - 1e-10
    assert np.isclose(tick["probability"], 0.25)
  assert np.isclose(doc["delta_tau"], np.pi / 2)
  assert doc["hamiltonians"]["system_pinned"] is False


def test_paw_run_csv():
  result = _invoke(["paw", "run", "--ticks", "8", "--format", "csv"])
  assert result.exit_code == 0
  lines = result.output.strip().splitlines()
  assert lines[0] == ("index,angle,probability,fidelity_vs_schrodinger,"
                      "state0_re,state0_im,state1_re,state1_im")
  assert len(lines) == 9


def test_paw_run_zero_ticks_is_a_schedule_error():
  result = _invoke(["paw", "run", "--ticks", "0"])
  assert result.exit_code == 1
  assert "ScheduleError" in result.output
  assert "at least 2 ticks" in result.output


def test_paw_run_braided_pinned(tmp_path):
  doc = _report(["paw", "run", "--resource", "braided", "--ticks", "4", "--pin-system"], tmp_path)
  assert doc["hamiltonians"] is None
  assert "misses tick" in doc["hamiltonian_error"]


def test_paw_run_with_povm_file(tmp_path):
  effects = []
  for j in range(4):
    ket = equatorial_ket(2 * np.pi * j / 4)
    m = 0.5 * np.outer(ket, ket.conj())
    effects.append({
      "outcome": f"t{j}",
      "matrix": [[[float(z.real), float(z.imag)] for z in row] for row in m],
    })
  povm = tmp_path / "clock.yaml"
  povm.write_text(yaml.safe_dump({"effects": effects}), encoding="utf-8")
  doc = _report(["paw", "run", "--povm-file", str(povm)], tmp_path)
  assert doc["n_ticks"] == 4
  assert doc["min_fidelity"] > 1 - 1e-10


def test_resolution_stabilizes(tmp_path):
  one = _report(["resolution", "--gates", "clifford", "--ancilla", "1"], tmp_path)
  two = _report(["resolution", "--gates", "clifford", "--ancilla", "2"], tmp_path)
  assert one["delta_tau"] == two["delta_tau"]
  assert one["n_ticks"] == 4
  universal = _report(["resolution", "--gates", "universal", "--ancilla", "2"], tmp_path)
  assert universal["n_ticks"] == 8


def test_usage_errors():
  assert _invoke(["bogus"]).exit_code == 2
  assert _invoke(["paw", "run", "--ticks", "four"]).exit_code == 2
  assert _invoke(["paw", "run"]).exit_code == 2
  assert _invoke(["resolution"]).exit_code == 2
  assert _invoke(["model", "show", "--format", "csv"]).exit_code == 2
  assert _invoke(["model", "show", "--model", "su2_4"]).exit_code == 2


def test_config_file_and_overrides(tmp_path):
  config = tmp_path / "config.yaml"
  config.write_text(yaml.safe_dump({"model": "ising", "ticks": 2}), encoding="utf-8")
  doc = _report(["paw", "run", "--config", str(config)], tmp_path)
  assert doc["model"] == "Ising"
  assert doc["n_ticks"] == 2
  loose = _report(["paw", "run", "--ticks", "4", "--tol-fidelity", "1e-6"], tmp_path)
  assert loose["min_fidelity"] > 1 - 1e-6
  strict = _report(["paw", "run", "--ticks", "4"], tmp_path)
  assert len(strict["config_digest"]) == 16
  assert strict["config_digest"] != loose["config_digest"]


def test_bad_config_file_is_a_usage_error(tmp_path):
  config = tmp_path / "config.yaml"
  config.write_text(yaml.safe_dump({"model": "su2_4"}), encoding="utf-8")
  assert _invoke(["model", "show", "--config", str(config)]).exit_code == 2


def test_reports_are_deterministic():
  args = ["paw", "run", "--resource", "braided", "--ticks", "8"]
  first, second = _invoke(args), _invoke(args)
  assert first.exit_code == 0
  assert first.output == second.output
  assert json.loads(first.output)["digest"] == json.loads(second.output)["digest"]


def test_main_returns_exit_codes():
  assert main(["model", "show", "--output", "/dev/null"]) == 0
  assert main(["fuse", "--state", "0", "--pair", "1", "4"]) == 1
  assert main(["no-such-command"]) == 2
