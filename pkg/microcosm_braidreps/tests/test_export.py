"""
Rendering tests.

"""
from json import loads

from hamcrest import (
    assert_that,
    calling,
    equal_to,
    has_entries,
    is_,
    raises,
    starts_with,
)

from microcosm_braidreps.braids import verify_braid_relations
from microcosm_braidreps.errors import ParameterError
from microcosm_braidreps.export import (
    JSON,
    LATEX,
    TEXT,
    latex_entry,
    latex_is_balanced,
    matrix_to_latex,
    render_matrix,
    render_rep,
    render_reports,
    to_json,
)
from microcosm_braidreps.families import burau_reduced, pascal_rep
from microcosm_braidreps.matrix import RingMatrix
from microcosm_braidreps.quantum import symmetric_square
from microcosm_braidreps.ring import Q, T


class TestLatex:

    def test_entries(self):
        assert_that(latex_entry(1 + Q + Q ** 2), is_(equal_to("1 + q + q^{2}")))
        assert_that(latex_entry(Q ** -1), is_(equal_to("q^{-1}")))
        assert_that(latex_entry(Q * T ** 2 * 3), is_(equal_to("3 q t^{2}")))

    def test_matrix(self):
        assert_that(
            matrix_to_latex(RingMatrix([[1, Q ** -1], [0, 1]])),
            is_(equal_to("\\begin{pmatrix}\n1 & q^{-1} \\\\\n0 & 1\n\\end{pmatrix}")),
        )

    def test_representation_is_balanced(self):
        text = render_rep(pascal_rep(Q, 3), LATEX)
        assert_that(text, starts_with("\\sigma_{1} \\mapsto \\begin{pmatrix}"))
        assert_that(latex_is_balanced(text), is_(equal_to(True)))

    def test_balance_check(self):
        assert_that(latex_is_balanced("\\begin{a}\\begin{b}\\end{b}\\end{a}"), is_(equal_to(True)))
        assert_that(latex_is_balanced("\\begin{pmatrix}\\end{bmatrix}"), is_(equal_to(False)))
        assert_that(latex_is_balanced("\\begin{pmatrix}"), is_(equal_to(False)))
        assert_that(latex_is_balanced("\\end{pmatrix}"), is_(equal_to(False)))


class TestJson:

    def test_keys_are_sorted(self):
        assert_that(to_json(dict(b=1, a=2)), is_(equal_to('{\n  "a": 2,\n  "b": 1\n}')))

    def test_representation(self):
        rep = burau_reduced(3)
        text = render_rep(rep, JSON)
        assert_that(text, is_(equal_to(render_rep(burau_reduced(3), JSON))))
        data = loads(text)
        assert_that(data, has_entries(family="burau-reduced", n=3, dim=2))
        assert_that(RingMatrix.from_json(data["images"][0]), is_(equal_to(rep.images[0])))

    def test_matrix(self):
        matrix = RingMatrix([[1, T], [0, Q]])
        assert_that(RingMatrix.from_json(loads(render_matrix(matrix, JSON))), is_(equal_to(matrix)))


class TestText:

    def test_representation(self):
        text = render_rep(symmetric_square(pascal_rep(1, 1)), TEXT)
        lines = text.splitlines()
        assert_that(lines[0], is_(equal_to("symmetric-square(pascal) n=3 dim=3")))
        assert_that(lines[1], starts_with("basis: "))

    def test_matrix(self):
        assert_that(render_matrix(RingMatrix([[1, Q], [0, 1]]), TEXT), is_(equal_to("[1, q]\n[0, 1]")))

    def test_reports(self):
        report = verify_braid_relations(burau_reduced(3))
        assert_that(render_reports([report], TEXT), is_(equal_to("braid_relations burau-reduced pass")))
        assert_that(loads(render_reports([report], JSON)), has_entries(status="pass"))
        assert_that(loads(render_reports([report, report], JSON)), is_(equal_to([report.to_dict()] * 2)))


def test_unknown_format():
    assert_that(calling(render_rep).with_args(burau_reduced(3), "xml"), raises(ParameterError))
    assert_that(calling(render_matrix).with_args(RingMatrix.identity(2), "xml"), raises(ParameterError))
