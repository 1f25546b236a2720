import json

try:
    import gracetree as gt
except ImportError:  # build-tree layout: the extension sits on sys.path directly
    import _gracetree as gt


def test_parse_round_trip():
    assert gt.parse("((2, 1, 1))") == "((2,1,1))"
    assert gt.size("((2,1,1))") == 9


def test_classify():
    info = gt.classify("((1,1,1))")
    assert "a" in info["classes"]
    assert "e" in info["classes"]
    assert info["depth"] == 3
    star = gt.classify("4")
    assert star["classes"] == []
    assert "diameter" in star["excluded"]["a"]


def test_label_and_verify():
    res = gt.label("((2,1,1),(1,2,1),(1,1,1))")
    assert res["graceful"]
    assert res["root_label"] == 0
    report = gt.verify_json(res["json"])
    assert report["graceful"]
    tree = json.loads(res["json"])
    n = len(tree["vertices"])
    assert sorted(v["label"] for v in tree["vertices"]) == list(range(n))


def test_label_rejects_out_of_class():
    import pytest

    with pytest.raises(Exception):
        gt.label("2")


def test_replay_matches_label_trace():
    res = gt.label("((1,1,1))", cls="e")
    star_n = int(res["trace"].splitlines()[0].split()[-1])
    script = "\n".join(
        line for line in res["trace"].splitlines() if not line.startswith("#")
    )
    assert gt.replay(star_n, script) == res["json"]


def test_oracle_agrees():
    labels = gt.oracle_label("((2,1,1))", root_label=0)
    assert labels is not None
    assert labels[0] == 0
    assert gt.oracle_label("1", root_label=5) is None


def test_enumerate_class():
    trees = gt.enumerate_class("e", 10)
    assert "((1,1,1))" in {gt.parse(t) for t in trees}
    for t in trees:
        assert "e" in gt.classify(t)["classes"]


def test_cli_entry_point():
    assert gt.run_cli(["classify", "((1,1,1))"]) == 0
    assert gt.run_cli(["label", "2"]) == 1
