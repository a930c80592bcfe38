from conftest import gen

from lilykernel import parse_graph, parse_instance, serialize_graph
from lilykernel.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_round_trips(capsys):
    code, out, _ = run(capsys, "gen", "grid(3,3)")
    assert code == 0
    assert parse_graph(out) == gen("grid(3,3)")


def test_gen_seed_changes_random_graphs(capsys):
    _, a, _ = run(capsys, "--seed", "1", "gen", "random_degenerate(10,2)")
    _, b, _ = run(capsys, "--seed", "2", "gen", "random_degenerate(10,2)")
    assert a != b


def test_solve_and_approx(capsys):
    code, out, _ = run(capsys, "solve", "--problem", "rcdom", "--r", "1",
                       "cycle(9)")
    assert code == 0 and "optimum 3" in out
    code, out, _ = run(capsys, "approx", "--r", "1", "cycle(9)")
    assert code == 0 and "bounds" in out


def test_bikernel_and_kernel_emit_instances(capsys):
    code, out, _ = run(capsys, "bikernel", "--problem", "total", "--r", "1",
                       "--k", "3", "cycle(8)")
    assert code == 0
    inst = parse_instance(out)
    assert inst.problem == "total" and inst.k == 3
    code, out, _ = run(capsys, "kernel", "--problem", "total", "--r", "1",
                       "--k", "3", "cycle(8)")
    assert code == 0
    plain = parse_instance(out)
    assert plain.offset == 2 and plain.k == 5
    assert plain.constrained == frozenset(plain.graph.vertices)


def test_core_and_lily_and_multikernel(capsys):
    code, out, _ = run(capsys, "core", "--problem", "rcdom", "--r", "1",
                       "star(8)")
    assert code == 0 and out.startswith("core ")
    code, out, _ = run(capsys, "lily", "--depth", "1", "--radius", "1",
                       "spider_forest(1,8,1)")
    assert code == 0 and "verified yes" in out
    code, out, _ = run(capsys, "multikernel", "--family", "domination",
                       "--r", "1", "spider_forest(2,3,1)")
    assert code == 0 and "offset=" in out


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--problem", "rcdom", "--r", "1",
                       "cycle(6)")
    assert code == 0 and "report rcdom" in out


def test_input_error_exit_code(capsys):
    code, _, err = run(capsys, "gen", "hexagon(3)")
    assert code == 2 and "error" in err


def test_guard_exit_code(capsys):
    code, _, err = run(capsys, "solve", "--problem", "rcdom", "--r", "1",
                       "grid(9,9)")
    assert code == 3 and "guard" in err


def test_file_input(tmp_path, capsys):
    target = tmp_path / "g.txt"
    target.write_text(serialize_graph(gen("cycle(6)")))
    code, out, _ = run(capsys, "solve", "--problem", "total", "--r", "1",
                       str(target))
    assert code == 0 and "optimum 4" in out


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.txt"
    code, out, _ = run(capsys, "gen", "cycle(5)", "-o", str(target))
    assert code == 0 and out == ""
    assert parse_graph(target.read_text()).n == 5


def test_csv_export(tmp_path, capsys):
    target = tmp_path / "constants.csv"
    code, _, _ = run(capsys, "verify", "--problem", "total", "--r", "1",
                     "--csv", str(target), "cycle(6)")
    assert code == 0
    lines = target.read_text().splitlines()
    assert lines[0] == "name,value,instance"
    assert len(lines) > 1
