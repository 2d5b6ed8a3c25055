"""End-to-end tests of the command-line front door."""

import io
import json
import subprocess
import sys

import pytest

from kchi.cli import main

C5 = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n"
K5 = "5 10\n" + "\n".join(f"{u} {v}" for u in range(5) for v in range(u + 1, 5)) + "\n"
C7 = "7 7\n" + "\n".join(f"{i} {(i + 1) % 7}" for i in range(7)) + "\n"


@pytest.fixture
def run(capsys, monkeypatch, tmp_path):
    def invoke(*argv, stdin=None):
        files = []
        for a in argv:
            if isinstance(a, tuple):  # (name, content) becomes a temp file
                p = tmp_path / a[0]
                p.write_text(a[1])
                files.append(str(p))
            else:
                files.append(a)
        if stdin is not None:
            monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
        try:
            code = main(files)
        except SystemExit as exc:
            code = exc.code
        out, err = capsys.readouterr()
        doc = json.loads(out) if out.lstrip().startswith("{") else out
        return code, doc, err

    return invoke


class TestColour:
    def test_k5_fits_max_degree(self, run):
        code, doc, err = run("colour", "--r", "2", ("k5.txt", K5))
        assert code == 0
        assert doc["palette"] <= 4 == doc["max_degree"]
        assert doc["verdict"]["ok"] and doc["verdict"]["first_violation"] is None
        assert sorted(e for cls in doc["classes"] for e in cls) == list(range(10))

    def test_reads_stdin_by_default(self, run):
        code, doc, _ = run("colour", stdin=C5)
        assert code == 0 and doc["palette"] <= 2


class TestImmerse:
    def test_c5_gives_verified_k3(self, run):
        code, doc, err = run("immerse", ("c5.txt", C5))
        assert code == 0
        assert doc["chi"] == 3 and doc["t"] == 3
        assert doc["corners"] == [0, 3, 4]
        assert doc["verdict"]["ok"]
        assert "verified K3 certificate" in err

    def test_alpha_premise_failure(self, run):
        code, doc, _ = run("immerse", ("c7.txt", C7))
        assert code == 2
        assert doc["error"]["type"] == "PremiseError"
        assert "non-adjacent" in doc["error"]["message"]


class TestVerify:
    def cert_for(self, run, text):
        _, doc, _ = run("immerse", ("g.txt", text))
        return doc

    def test_accepts_own_output(self, run):
        cert = self.cert_for(run, C5)
        code, doc, _ = run("verify", ("g.txt", C5), ("cert.json", json.dumps(cert)))
        assert code == 0 and doc["ok"]
        assert doc["t"] == 3 and doc["t_source"] == "chromatic number"

    def test_rejects_tampering_with_first_clause(self, run):
        cert = self.cert_for(run, C5)
        cert["paths"][0]["edges"] = [0, 1]  # truncate the long path
        code, doc, _ = run("verify", ("g.txt", C5), ("cert.json", json.dumps(cert)))
        assert code == 1 and not doc["ok"]
        assert doc["first_violation"] == doc["failures"][0]
        assert "stops at" in doc["first_violation"]

    def test_falls_back_to_certificate_t(self, run):
        cert = {"kind": "immersion", "t": 1, "corners": [0], "paths": []}
        code, doc, _ = run("verify", ("g.txt", C7), ("cert.json", json.dumps(cert)))
        assert code == 0 and doc["t_source"] == "certificate" and doc["t"] == 1

    def test_malformed_certificate(self, run):
        code, doc, _ = run("verify", ("g.txt", C5), ("cert.json", "{nope"))
        assert code == 2 and doc["error"]["type"] == "GraphError"


class TestGen:
    def test_family(self, run):
        code, doc, _ = run("gen", "cycle", "5")
        assert code == 0
        assert (doc["n"], doc["m"], doc["family"]) == (5, 5, "cycle")

    def test_seeded_random_is_reproducible(self, run):
        a = run("gen", "--n", "9", "--density", "0.6", "--seed", "42")
        b = run("gen", "--n", "9", "--density", "0.6", "--seed", "42")
        assert a == b
        assert a[1]["seed"] == 42  # echoed for reproducibility
        c = run("gen", "--n", "9", "--density", "0.6", "--seed", "43")
        assert c[1]["edges"] != a[1]["edges"]

    def test_dot_format(self, run):
        code, out, _ = run("gen", "cocktail", "2", "--format", "dot")
        assert code == 0 and out.startswith("graph g {") and "0 -- 2;" in out

    def test_doubled_family(self, run):
        code, doc, _ = run("gen", "doubled", "cycle", "5")
        assert code == 0 and doc["m"] == 10

    def test_needs_parameters(self, run):
        code, doc, _ = run("gen")
        assert code == 2 and "family or --n" in doc["error"]["message"]

    def test_output_feeds_other_commands(self, run):
        _, doc, _ = run("gen", "cycle", "5")
        code, verdict, _ = run("immerse", ("g.json", json.dumps(doc)))
        assert code == 0 and verdict["chi"] == 3


class TestOracle:
    def test_chi(self, run):
        code, doc, _ = run("oracle", "chi", ("c5.txt", C5))
        assert code == 0 and doc["value"] == 3

    def test_chi_prime_r_on_k5(self, run):
        code, doc, _ = run("oracle", "chi-prime-r", ("k5.txt", K5), "--r", "2")
        assert code == 0 and doc["value"] == 2 and doc["r"] == 2

    def test_immersion_exists(self, run):
        code, doc, _ = run("oracle", "immersion-exists", ("c5.txt", C5))
        assert code == 0 and doc["value"] is True and doc["t"] == 3

    def test_deficiency_of_doubled_cycle(self, run):
        _, g, _ = run("gen", "doubled", "cycle", "5")
        n, edges = g["n"], g["edges"]
        text = f"{n} {len(edges)}\n" + "".join(f"{u} {v}\n" for u, v in edges)
        code, doc, _ = run("oracle", "deficiency", ("g.txt", text))
        assert code == 0 and doc["value"] == 0 and doc["s"] == [] and doc["t"] == []

    def test_alpha(self, run):
        code, doc, _ = run("oracle", "alpha", ("c7.txt", C7))
        assert code == 0 and doc["value"] == 3


class TestStress:
    def test_small_campaign_verifies(self, run):
        code, doc, err = run("stress", "--n", "12", "--count", "20", "--seed", "1")
        assert code == 0
        assert doc["verified"] == "20/20" and doc["failures"] == []
        assert "20/20 verified" in err
        assert doc["seed"] == 1

    def test_worker_pool_path(self, run):
        code, doc, _ = run("stress", "--n", "10", "--count", "40", "--seed", "3")
        assert code == 0 and doc["verified"] == "40/40"

    def test_campaigns_are_reproducible(self, run):
        a = run("stress", "--n", "14", "--count", "10", "--seed", "9")
        assert a == run("stress", "--n", "14", "--count", "10", "--seed", "9")


class TestErrorDiscipline:
    def test_parse_errors_carry_positions(self, run):
        code, doc, _ = run("colour", ("bad.txt", "3 1\n0 0\n"))
        assert code == 2 and "loop" in doc["error"]["message"]

    def test_unknown_subcommand(self, run):
        code, doc, _ = run("frobnicate")
        assert code == 2 and doc["error"]["type"] == "UsageError"

    def test_missing_file(self, run):
        code, doc, _ = run("colour", "no-such-file.txt")
        assert code == 2 and doc["error"]["type"] == "FileNotFoundError"


def test_module_entry_point(tmp_path):
    g = tmp_path / "c5.txt"
    g.write_text(C5)
    proc = subprocess.run(
        [sys.executable, "-m", "kchi.cli", "immerse", str(g)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"]["ok"]
    assert "verified K3" in proc.stderr
