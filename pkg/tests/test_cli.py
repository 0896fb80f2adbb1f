import json

import numpy as np
import pytest

from nltrace import io
from nltrace.cli import main
from nltrace.measures import AlphaWeights, measure_from_alpha


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def diag_matrix_obj(entries):
    n = len(entries)
    return {
        "n": n,
        "entries": [
            [[float(entries[i]) if i == j else 0.0, 0.0] for j in range(n)]
            for i in range(n)
        ],
    }


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out.strip()
    return code, json.loads(out) if out else None


class TestIO:
    def test_matrix_round_trip(self):
        rng = np.random.default_rng(0)
        m = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        back = io.matrix_from_dict(io.matrix_to_dict(m))
        assert np.array_equal(back, m)

    def test_matrix_schema_errors(self):
        with pytest.raises(io.ParseError):
            io.matrix_from_dict({"n": 2, "entries": [[[1, 0]]]})
        with pytest.raises(io.ParseError):
            io.matrix_from_dict({"entries": []})
        with pytest.raises(io.ParseError):
            io.matrix_from_dict({"n": 1, "entries": [[[np.inf, 0]]]})

    def test_alpha_round_trip(self):
        alpha = AlphaWeights([0, 0.5, 1.25])
        back = io.alpha_from_dict(io.alpha_to_dict(alpha))
        assert np.array_equal(back.alpha, alpha.alpha)

    def test_measure_round_trip(self):
        mu = measure_from_alpha(AlphaWeights([0, 0.5, 0.75, 2.0]))
        back = io.measure_from_dict(io.measure_to_dict(mu))
        assert np.array_equal(back.table, mu.table)

    def test_measure_missing_subset(self):
        with pytest.raises(io.ParseError):
            io.measure_from_dict({"n": 2, "values": {"1": 0.5, "3": 1.0}})

    def test_empty_set_omitted_is_fine(self):
        mu = io.measure_from_dict(
            {"n": 2, "values": {"1": 0.5, "2": 0.5, "3": 1.0}}
        )
        assert mu.value(0) == 0.0


class TestEigCommand:
    def test_diagonal(self, tmp_path, capsys):
        mfile = write(tmp_path, "m.json", diag_matrix_obj([1, 3, 2]))
        code, out = run(capsys, ["eig", mfile])
        assert code == 0
        assert out == {"eigenvalues": [3.0, 2.0, 1.0]}

    def test_identity(self, tmp_path, capsys):
        mfile = write(tmp_path, "m.json", diag_matrix_obj([1, 1, 1]))
        code, out = run(capsys, ["eig", mfile])
        assert code == 0
        assert out == {"eigenvalues": [1.0, 1.0, 1.0]}

    def test_non_hermitian_exit_3(self, tmp_path, capsys):
        obj = {
            "n": 2,
            "entries": [[[0.0, 0.0], [1.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]],
        }
        mfile = write(tmp_path, "m.json", obj)
        assert main(["eig", mfile]) == 3
        capsys.readouterr()

    def test_parse_error_exit_2(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        assert main(["eig", str(path)]) == 2
        capsys.readouterr()

    def test_missing_file_exit_2(self, capsys):
        assert main(["eig", "/nonexistent/m.json"]) == 2
        capsys.readouterr()


class TestTraceCommand:
    def test_choquet_linear(self, tmp_path, capsys):
        a = write(tmp_path, "a.json", {"alpha": [0, 1, 2, 3]})
        m = write(tmp_path, "m.json", diag_matrix_obj([3, 2, 1]))
        code, out = run(capsys, ["trace", "choquet", a, m])
        assert code == 0 and out == {"value": 6.0}

    def test_choquet_top_eigenvalue(self, tmp_path, capsys):
        a = write(tmp_path, "a.json", {"alpha": [0, 1, 1, 1]})
        m = write(tmp_path, "m.json", diag_matrix_obj([3, 2, 1]))
        code, out = run(capsys, ["trace", "choquet", a, m])
        assert code == 0 and out == {"value": 3.0}

    def test_sugeno(self, tmp_path, capsys):
        a = write(tmp_path, "a.json", {"alpha": [0, 1, 2, 3]})
        m = write(tmp_path, "m.json", diag_matrix_obj([3, 2, 1]))
        code, out = run(capsys, ["trace", "sugeno", a, m])
        assert code == 0 and out == {"value": 2.0}

    def test_not_psd_exit_3(self, tmp_path, capsys):
        a = write(tmp_path, "a.json", {"alpha": [0, 1, 2]})
        m = write(tmp_path, "m.json", diag_matrix_obj([1, -1]))
        assert main(["trace", "choquet", a, m]) == 3
        capsys.readouterr()

    def test_dimension_mismatch_exit_4(self, tmp_path, capsys):
        a = write(tmp_path, "a.json", {"alpha": [0, 1, 2, 3]})
        m = write(tmp_path, "m.json", diag_matrix_obj([1, 1]))
        assert main(["trace", "choquet", a, m]) == 4
        capsys.readouterr()


class TestNormCommand:
    def test_kyfan_operator_norm(self, tmp_path, capsys):
        m = write(tmp_path, "m.json", diag_matrix_obj([3, 1, 1]))
        code, out = run(capsys, ["norm", "--kyfan", "1", m])
        assert code == 0 and out == {"value": 3.0}

    def test_alpha_file_trace_norm(self, tmp_path, capsys):
        a = write(tmp_path, "a.json", {"alpha": [0, 1, 2, 3]})
        m = write(tmp_path, "m.json", diag_matrix_obj([1, 2, 3]))
        code, out = run(capsys, ["norm", a, m])
        assert code == 0
        assert out["value"] == pytest.approx(6.0, abs=1e-10)

    def test_kyfan_full_equals_alpha_route(self, tmp_path, capsys):
        rng = np.random.default_rng(3)
        mat = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        m = write(tmp_path, "m.json", io.matrix_to_dict(mat))
        a = write(tmp_path, "a.json", {"alpha": [0, 1, 2, 3]})
        _, out1 = run(capsys, ["norm", "--kyfan", "3", m])
        _, out2 = run(capsys, ["norm", a, m])
        assert out1["value"] == pytest.approx(out2["value"], abs=1e-10)

    def test_kyfan_out_of_range_exit_4(self, tmp_path, capsys):
        m = write(tmp_path, "m.json", diag_matrix_obj([1, 1]))
        assert main(["norm", "--kyfan", "5", m]) == 4
        capsys.readouterr()


class TestCheckCommand:
    def test_concave(self, tmp_path, capsys):
        a = write(tmp_path, "a.json", {"alpha": [0, 1, 2, 3]})
        code, out = run(capsys, ["check", a])
        assert code == 0
        assert out == {
            "concave": True,
            "coeffs": [1.0, 1.0, 1.0],
            "kyfan_weights": [0.0, 0.0, 1.0],
        }

    def test_nonconcave_weights_null(self, tmp_path, capsys):
        a = write(tmp_path, "a.json", {"alpha": [0, 1, 1, 2]})
        code, out = run(capsys, ["check", a])
        assert code == 0
        assert out["concave"] is False
        assert out["kyfan_weights"] is None

    def test_invalid_alpha_exit_2(self, tmp_path, capsys):
        a = write(tmp_path, "a.json", {"alpha": [0, 2, 1]})
        assert main(["check", a]) == 2
        capsys.readouterr()

    def test_nonzero_start_exit_2(self, tmp_path, capsys):
        a = write(tmp_path, "a.json", {"alpha": [1, 2, 3]})
        assert main(["check", a]) == 2
        capsys.readouterr()


class TestDominateCommand:
    def test_dominated_with_factor(self, tmp_path, capsys):
        a = write(tmp_path, "a.json", diag_matrix_obj([1, 1]))
        b = write(tmp_path, "b.json", diag_matrix_obj([3, 2]))
        code, out = run(capsys, ["dominate", a, b, "--factor"])
        assert code == 0
        assert out["eigen_dominates"] is True
        assert out["weak_majorizes"] is True
        assert out["contraction"]["n"] == 2
        assert out["residual"] <= 1e-7

    def test_equal_inputs_unitary_factor(self, tmp_path, capsys):
        a = write(tmp_path, "a.json", diag_matrix_obj([2, 1]))
        code, out = run(capsys, ["dominate", a, a, "--factor"])
        assert code == 0
        assert out["eigen_dominates"] is True and out["majorizes"] is True
        c = io.matrix_from_dict(out["contraction"])
        assert np.allclose(c @ c.conj().T, np.eye(2), atol=1e-8)

    def test_not_dominated(self, tmp_path, capsys):
        a = write(tmp_path, "a.json", diag_matrix_obj([3, 0]))
        b = write(tmp_path, "b.json", diag_matrix_obj([2, 2]))
        code, out = run(capsys, ["dominate", a, b, "--factor"])
        assert code == 0
        assert out["eigen_dominates"] is False
        assert out["contraction"] is None and out["residual"] is None

    def test_dimension_mismatch_exit_4(self, tmp_path, capsys):
        a = write(tmp_path, "a.json", diag_matrix_obj([1, 1]))
        b = write(tmp_path, "b.json", diag_matrix_obj([1, 1, 1]))
        assert main(["dominate", a, b]) == 4
        capsys.readouterr()


class TestWitnessCommand:
    def test_canonical_witness(self, capsys):
        code, out = run(capsys, ["witness", "--coeffs", "0,1,0", "--k", "1", "--t", "3"])
        assert code == 0
        assert out["verified"] is True
        assert out["determinant"] == pytest.approx(-2.0, abs=1e-10)

    def test_hand_worked_witness(self, capsys):
        code, out = run(capsys, ["witness", "--coeffs", "1,0,1", "--k", "2", "--t", "4"])
        assert code == 0
        assert out["determinant"] == pytest.approx(-11.0, abs=1e-10)

    def test_precondition_exit_5(self, capsys):
        assert main(["witness", "--coeffs", "1,1,1", "--k", "1", "--t", "2"]) == 5
        capsys.readouterr()

    def test_bad_coeffs_exit_5(self, capsys):
        assert main(["witness", "--coeffs", "a,b", "--k", "1", "--t", "2"]) == 5
        capsys.readouterr()


class TestSuiteCommand:
    def test_small_run_passes(self, capsys):
        code, out = run(
            capsys,
            ["suite", "--suite", "choquet", "--n", "3", "--samples", "5", "--seed", "1"],
        )
        assert code == 0
        assert out["pass"] is True
        names = [p["name"] for p in out["suites"][0]["properties"]]
        assert "comonotonic_additivity" in names

    def test_zero_samples_exit_2(self, capsys):
        assert main(["suite", "--samples", "0"]) == 2
        capsys.readouterr()

    def test_bad_dimension_exit_2(self, capsys):
        assert main(["suite", "--n", "12", "--samples", "5"]) == 2
        capsys.readouterr()

    def test_repeated_run_identical_output(self, capsys):
        argv = ["suite", "--suite", "sugeno", "--n", "3", "--samples", "5", "--seed", "9"]
        assert main(argv) == 0
        first = capsys.readouterr().out
        assert main(argv) == 0
        second = capsys.readouterr().out
        assert first == second
