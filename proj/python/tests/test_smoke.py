import pytest

hallkit = pytest.importorskip("hallkit")


def test_zoo():
    g = hallkit.zoo_group("gl32")
    assert g.degree == 7 and g.order == 168
    assert "sym<n>" in hallkit.zoo_names()
    with pytest.raises(KeyError):
        hallkit.zoo_group("nosuch")


def test_analyze():
    r = hallkit.analyze("alt5", [2, 3])
    assert r["E"] is True and r["C"] is True and r["D"] is False and r["k"] == 1
    r = hallkit.analyze("gl32", "2,3")
    assert r["C"] is False and r["k"] == 2


def test_reduce_agrees_and_replays():
    r = hallkit.reduce("sym5", [2, 3], compare_oracle=True)
    assert r["verdict"] is True and r["comparison"]["agree"]
    assert hallkit.replay_trace(r["trace"]) == ""


def test_group_from_generators():
    s3 = hallkit.group((3, [[1, 0, 2], [1, 2, 0]]))
    assert s3.order == 6
    h = hallkit.find_hall(s3, [2])
    assert h.order == 2 and s3.contains(h)


def test_k_induced():
    r = hallkit.k_induced("sym5", hallkit.group((5, [[1, 2, 0, 3, 4], [1, 2, 3, 4, 0]])), [2, 3])
    assert r["k_induced"] == 1 and r["k_total"] == 1
    with pytest.raises(ValueError):
        hallkit.k_induced("sym4", hallkit.group((4, [[1, 0, 2, 3]])), [2])


def test_errors():
    with pytest.raises(ValueError):
        hallkit.analyze("alt5", "2,4")
    with pytest.raises(hallkit.BudgetExceeded):
        hallkit.analyze("alt7", [2, 3], order_limit=100)


def test_example():
    r = hallkit.example_gl52()
    assert r["ok"] and r["G_order"] == "9999360" and r["k_exhaustive_verified"] is False


def test_bundled_corpus_subset(tmp_path):
    import json

    entries = json.loads(hallkit.CORPUS.read_text())["entries"][:4]
    m = tmp_path / "m.json"
    m.write_text(json.dumps({"entries": entries}))
    r = hallkit.run_corpus(m)
    assert r["ok"] and len(r["entries"]) == 4
