import io
import json

from madcycle.cli import run_cli


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def write_k4(tmp_path):
    f = tmp_path / "k4.el"
    f.write_text("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    return str(f)


def write_bowtie(tmp_path):
    f = tmp_path / "bowtie.el"
    f.write_text("0 1\n1 2\n2 0\n2 3\n3 4\n4 2\n")
    return str(f)


class TestSolve:
    def test_k4_k0_json(self, tmp_path):
        code, out, _ = run(["solve", write_k4(tmp_path), "-k", "0", "--json"])
        assert code == 0
        obj = json.loads(out)
        assert obj["answer"] == "yes"
        assert len(obj["cycle"]) == 4
        assert obj["mad"] == {"num": 3, "den": 1}

    def test_k4_k2_exit_no(self, tmp_path):
        code, out, _ = run(["solve", write_k4(tmp_path), "-k", "2"])
        assert code == 1 and "answer no" in out

    def test_solve_verify_pipeline(self, tmp_path):
        path = write_k4(tmp_path)
        code, out, _ = run(["solve", path, "-k", "1", "--json"])
        assert code == 0
        cyc = json.loads(out)["cycle"]
        code, out, _ = run(
            ["verify", path, "--cycle", ",".join(map(str, cyc)), "--min-len", "4"]
        )
        assert code == 0 and out.strip() == "ok"

    def test_deterministic_stdout(self, tmp_path):
        path = write_k4(tmp_path)
        a = run(["solve", path, "-k", "1", "--json", "--seed", "7"])
        b = run(["solve", path, "-k", "1", "--json", "--seed", "7"])
        assert a == b


    def test_trace_included(self, tmp_path):
        # 2-connected host whose densest core is a bowtie: rule 2 fires
        f = tmp_path / "bowtie_ring.el"
        f.write_text(
            "0 1\n1 2\n2 0\n2 3\n3 4\n4 2\n"
            "0 5\n5 6\n6 7\n7 8\n8 9\n9 10\n10 3\n"
        )
        code, out, _ = run(["solve", str(f), "-k", "0", "--json", "--trace"])
        assert code == 0
        obj = json.loads(out)
        assert len(obj["trace"]) >= 1
        assert all(
            {"rule", "removed", "eg_before", "eg_after"} <= set(s)
            for s in obj["trace"]
        )

    def test_path_mode(self, tmp_path):
        code, out, _ = run(["solve", write_k4(tmp_path), "-k", "1", "--path", "--json"])
        assert code == 0
        obj = json.loads(out)
        assert obj["answer"] == "yes" and len(obj["path"]) >= obj["threshold_len"]


class TestVerify:
    def test_short_cycle_rejected(self, tmp_path):
        code, out, _ = run(
            ["verify", write_k4(tmp_path), "--cycle", "0,1,2", "--min-len", "4"]
        )
        assert code == 1 and "below claimed minimum" in out


class TestMad:
    def test_bowtie(self, tmp_path):
        code, out, _ = run(["mad", write_bowtie(tmp_path)])
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "12/5"
        assert lines[1] == "witness 0 1 2 3 4"


class TestGenOracleGadget:
    def test_gen_parses_back(self, tmp_path):
        code, out, _ = run(["gen", "gnp2c", "--seed", "3", "--param", "n=8"])
        assert code == 0
        from madcycle.instances import parse_graph

        g = parse_graph(out)
        assert g.n == 8

    def test_oracle_cycle(self, tmp_path):
        code, out, _ = run(["oracle", "cycle", write_k4(tmp_path)])
        assert code == 0 and "circumference 4" in out

    def test_oracle_mad(self, tmp_path):
        code, out, _ = run(["oracle", "mad", write_bowtie(tmp_path)])
        assert code == 0 and out.strip() == "12/5"

    def test_gadget(self, tmp_path):
        f = tmp_path / "c4.el"
        f.write_text("0 1\n1 2\n2 3\n3 0\n")
        code, out, _ = run(["gadget", str(f)])
        assert code == 0
        from madcycle.instances import parse_graph

        g = parse_graph(out)
        assert g.n == 12 and g.m == 16


class TestErrors:
    def test_usage_error(self):
        code, _, err = run(["solve"])
        assert code == 64 and "usage error" in err

    def test_data_error(self, tmp_path):
        f = tmp_path / "bad.el"
        f.write_text("0 0\n")
        code, _, err = run(["solve", str(f), "-k", "0"])
        assert code == 65 and "data error" in err

    def test_missing_file(self):
        code, _, err = run(["mad", "/nonexistent/graph.el"])
        assert code == 65
