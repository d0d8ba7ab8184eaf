"""
Command line tests.

"""
from io import StringIO
from json import dumps, loads
from os.path import join
from shutil import rmtree
from tempfile import mkdtemp

from hamcrest import (
    assert_that,
    contains_string,
    equal_to,
    has_entries,
    has_length,
    is_,
)
from nose.plugins.attrib import attr

from microcosm_braidreps.cli import run
from microcosm_braidreps.export import latex_is_balanced


class TestRun:

    def setup(self):
        self.output = StringIO()
        self.errors = StringIO()

    def run(self, *argv):
        return run(list(argv), output=self.output, errors=self.errors)

    def test_word_times_inverse(self):
        code = self.run("word", "--family", "burau-reduced", "--n", "4", "--t", "t", "--word", "1 -1")
        assert_that(code, is_(equal_to(0)))
        assert_that(self.output.getvalue(), is_(equal_to("[1, 0, 0]\n[0, 1, 0]\n[0, 0, 1]\n")))

    def test_build(self):
        code = self.run("build", "--family", "pascal", "--n", "1", "--q", "1")
        assert_that(code, is_(equal_to(0)))
        assert_that(self.output.getvalue().splitlines(), is_(equal_to([
            "pascal n=3 dim=2",
            "sigma_1:",
            "[1, 1]",
            "[0, 1]",
            "sigma_2:",
            "[1, 0]",
            "[-1, 1]",
        ])))

    def test_verify(self):
        code = self.run("verify", "--family", "lk", "--n", "3")
        assert_that(code, is_(equal_to(0)))
        assert_that(loads(self.output.getvalue()), has_entries(status="pass", family="lk"))

    def test_verify_failure(self):
        spec = dumps(dict(family="kosyak", n=2, **{"lambda": ["1", "2", "1"]}))
        code = self.run("verify", "--spec", spec, "--non-strict")
        assert_that(code, is_(equal_to(1)))
        assert_that(loads(self.output.getvalue()), has_entries(status="fail"))
        assert_that(self.errors.getvalue(), contains_string("verification failed"))

    def test_irreducible(self):
        code = self.run("irreducible", "--n", "2", "--q", "-1")
        assert_that(code, is_(equal_to(0)))
        data = loads(self.output.getvalue())
        assert_that(data, has_entries(n_q_value="0", subspace_irreducible_lambda1=False))

    @attr("slow")
    def test_irreducible_sweep(self):
        code = self.run("irreducible", "--sweep")
        assert_that(code, is_(equal_to(0)))
        assert_that(loads(self.output.getvalue()), has_length(72))

    def test_equiv(self):
        code = self.run(
            "equiv",
            "--spec", dumps(dict(family="tuba-wenzl", dim=3, **{"lambda": ["1", "1", "1"]})),
            "--spec", dumps(dict(family="pascal", n=2, q="1")),
        )
        assert_that(code, is_(equal_to(0)))
        assert_that(loads(self.output.getvalue()), has_entries(verdict="equivalent_at_samples"))

    def test_quantum_check(self):
        assert_that(self.run("quantum-check", "--n", "1"), is_(equal_to(0)))

    def test_export(self):
        code = self.run("export", "--family", "burau", "--n", "3", "--format", "latex")
        assert_that(code, is_(equal_to(0)))
        assert_that(latex_is_balanced(self.output.getvalue()), is_(equal_to(True)))

    def test_out(self):
        directory = mkdtemp()
        try:
            path = join(directory, "rep.json")
            assert_that(self.run("export", "--family", "burau-reduced", "--n", "3", "--out", path), is_(equal_to(0)))
            with open(path) as file_:
                assert_that(loads(file_.read()), has_entries(family="burau-reduced", dim=2))
            assert_that(self.output.getvalue(), is_(equal_to("")))
        finally:
            rmtree(directory)

    def test_usage_errors(self):
        assert_that(self.run("build"), is_(equal_to(2)))
        assert_that(self.run("build", "--family", "pascal", "--q", "z"), is_(equal_to(2)))
        assert_that(self.errors.getvalue(), contains_string("unknown symbol 'z'"))
        assert_that(self.run("build", "--spec", dumps(dict(family="jones"))), is_(equal_to(2)))
        assert_that(self.run("word", "--family", "burau", "--n", "3", "--word", "1 5"), is_(equal_to(2)))
        assert_that(self.run("equiv", "--spec", "{}"), is_(equal_to(2)))
        assert_that(self.run("build", "--spec", "[1]"), is_(equal_to(2)))
        assert_that(self.run("build", "--spec", dumps(dict(family="kosyak", n=2, **{"lambda": 5}))), is_(equal_to(2)))
        assert_that(self.errors.getvalue(), contains_string("lambda must be a list"))
