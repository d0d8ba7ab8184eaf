"""
Rendering of matrices, representations and reports as JSON, LaTeX or text.

JSON output is sorted so that identical inputs give byte-identical output.

"""
from json import dumps
import re

from microcosm_braidreps.errors import ParameterError


JSON = "json"
LATEX = "latex"
TEXT = "text"
FORMATS = (JSON, LATEX, TEXT)

_POWER = re.compile(r"\^(-?\d+)")
_ENVIRONMENT = re.compile(r"\\(begin|end)\{(\w+)\}")


def latex_entry(value):
    """
    LaTeX form of a scalar: braced exponents, juxtaposed factors.

    """
    return _POWER.sub(r"^{\1}", value.to_text()).replace("*", " ")


def matrix_to_latex(matrix):
    rows = [
        " & ".join(latex_entry(value) for value in row)
        for row in matrix.entries
    ]
    return "\\begin{pmatrix}\n" + " \\\\\n".join(rows) + "\n\\end{pmatrix}"


def rep_to_latex(rep):
    lines = []
    for index, image in enumerate(rep.images):
        lines.append("\\sigma_{{{}}} \\mapsto {}".format(index + 1, matrix_to_latex(image)))
    return "\n".join(lines)


def rep_to_text(rep):
    blocks = ["{} n={} dim={}{}".format(rep.family, rep.strands, rep.dim, " (partial)" if rep.partial else "")]
    if rep.basis:
        blocks.append("basis: {}".format(rep.basis))
    for index, image in enumerate(rep.images):
        blocks.append("sigma_{}:\n{}".format(index + 1, image.to_text()))
    return "\n".join(blocks)


def latex_is_balanced(text):
    """
    Every \\begin{env} is closed by a matching \\end{env} in nesting order.

    """
    stack = []
    for kind, environment in _ENVIRONMENT.findall(text):
        if kind == "begin":
            stack.append(environment)
        elif not stack or stack.pop() != environment:
            return False
    return not stack


def to_json(payload):
    return dumps(payload, sort_keys=True, indent=2)


def render_rep(rep, output_format):
    if output_format == JSON:
        return to_json(rep.to_dict())
    if output_format == LATEX:
        return rep_to_latex(rep)
    if output_format == TEXT:
        return rep_to_text(rep)
    raise ParameterError("unknown format: {}".format(output_format))


def render_matrix(matrix, output_format):
    if output_format == JSON:
        return to_json(matrix.to_json())
    if output_format == LATEX:
        return matrix_to_latex(matrix)
    if output_format == TEXT:
        return matrix.to_text()
    raise ParameterError("unknown format: {}".format(output_format))


def render_reports(reports, output_format):
    """
    Reports render as JSON in every format except text, which lists one status line each.

    """
    if output_format == TEXT:
        return "\n".join(_report_line(report) for report in reports)
    payload = [report.to_dict() for report in reports]
    return to_json(payload[0] if len(payload) == 1 else payload)


def _report_line(report):
    data = report.to_dict()
    label = data.get("check", "report")
    status = data.get("status", data.get("verdict", ""))
    subject = data.get("family") or data.get("n", "")
    return "{} {} {}".format(label, subject, status).strip()
