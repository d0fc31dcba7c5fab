#
# Copyright 2016-2026 The iterexpand authors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as
# published by the Free Software Foundation, either version 3 of the
# License, or (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.
# If not, see <http://www.gnu.org/licenses/gpl.html>
#
# This module is part of iterexpand, an asymptotics tool for iterated maps
"""Output rendering.

Text and LaTeX go through the jinja2 templates of iterexpand/templates,
JSON through the json module. Every renderer takes its data already
derived and returns the document as a string.
"""
import json
import logging

from jinja2 import Environment, PackageLoader

from iterexpand import settings
from iterexpand.engine.series_spec import SCALE_PI_SQUARED
from iterexpand.expansion import block_sign
from iterexpand.expansion import displayed_terms
from iterexpand.expansion import expansion_to_dict
from iterexpand.expansion import folds_prefactor
from iterexpand.kernel import format_rational

LOGGER = logging.getLogger("iterexpand.render")

FORMATS = ("text", "json", "latex")

ENVIRONMENT = Environment(loader=PackageLoader('iterexpand', 'templates'),
                          trim_blocks=True, lstrip_blocks=True)


def _render(template, **context):
    """Render a template of iterexpand/templates."""
    tpl = ENVIRONMENT.get_template(template)
    # pylint: disable=no-member
    return tpl.render(settings=settings, **context).rstrip("\n")


def to_json(document):
    """Pretty printed JSON document."""
    return json.dumps(document, indent=2)


def _check_format(output_format, allowed=FORMATS):
    """Reject an unknown output format."""
    if output_format not in allowed:
        raise ValueError("unknown format %r (known: %s)" %
                         (output_format, ', '.join(allowed)))


# ======== expansion ========
def _prefactor_text(expansion):
    """(lambda)^(1/tau), or (lambda/pi^2)^(1/tau) when scaled."""
    lam = format_rational(expansion.lam)
    if expansion.scale == SCALE_PI_SQUARED:
        return "(%s/pi^2)^(1/%s)" % (lam, expansion.tau)
    return "(%s)^(1/%s)" % (lam, expansion.tau)


def _prefactor_latex(expansion):
    """LaTeX of the prefactor."""
    lam = format_rational(expansion.lam)
    if expansion.scale == SCALE_PI_SQUARED:
        return "(%s/\\pi^2)^{1/%s}" % (lam, expansion.tau)
    return "(%s)^{1/%s}" % (lam, expansion.tau)


def _blocks(expansion):
    """[(m, [(p, poly in C)])] as printed, zero terms dropped."""
    terms = displayed_terms(expansion)
    return [(m, [(p, terms[(m, p)]) for p in range(m, -1, -1)
                 if not terms[(m, p)].is_zero()])
            for m in range(expansion.order + 1)]


def _nonzero(poly):
    """[(degree, coefficient)] of the nonzero coefficients."""
    return [(degree, poly.coefficient(degree))
            for degree in range(poly.degree + 1)
            if poly.coefficient(degree) != 0]


def _power_text(exponent):
    """n, n^2 or n^(3/2)."""
    if exponent == 1:
        return "n"
    if exponent.denominator == 1:
        return "n^%s" % exponent.numerator
    return "n^(%s)" % format_rational(exponent)


def _term_text(poly, p, exponent):
    """(sign, body) of one term, e.g. (-1, "3/10*ln(n)/n^(3/2)")."""
    log_part = "" if p == 0 else ("ln(n)" if p == 1 else "ln(n)^%s" % p)
    nonzero = _nonzero(poly)
    if len(nonzero) == 1:
        degree, value = nonzero[0]
        sign = -1 if value < 0 else 1
        pieces = []
        if abs(value) != 1 or (degree == 0 and not log_part):
            pieces.append(format_rational(abs(value)))
        if degree:
            pieces.append("C" if degree == 1 else "C^%s" % degree)
        if log_part:
            pieces.append(log_part)
        numerator = "*".join(pieces)
    else:
        sign = block_sign(poly)
        numerator = "(%s)" % (poly * sign).format('C')
        if log_part:
            numerator += "*" + log_part
    return sign, "%s/%s" % (numerator, _power_text(exponent))


def _join_text(signed):
    """Join (sign, body) pairs into a sum ending with "+ ..."."""
    text = ""
    for index, (sign, body) in enumerate(signed):
        if index == 0:
            text = body if sign > 0 else "-" + body
        else:
            text += (" + " if sign > 0 else " - ") + body
    return (text or "0") + " + ..."


def expansion_text_line(expansion):
    """One line form, e.g. "x_n ~ 1/n - ln(n)/n^2 - C/n^2 + ..."."""
    signed = [_term_text(poly, p, expansion.exponent(m))
              for m, row in _blocks(expansion) for p, poly in row]
    if folds_prefactor(expansion):
        header = "x_n"
    else:
        header = "x_n / %s" % _prefactor_text(expansion)
    return "%s ~ %s" % (header, _join_text(signed))


def _rational_latex(value):
    """p or \\frac{p}{q}."""
    if value.denominator == 1:
        return str(value.numerator)
    return "\\frac{%s}{%s}" % (value.numerator, value.denominator)


def _poly_latex(poly):
    """LaTeX of a polynomial in C, highest degree first."""
    pieces = []
    for degree, value in reversed(_nonzero(poly)):
        magnitude = abs(value)
        power = "" if degree == 0 else \
            ("C" if degree == 1 else "C^{%s}" % degree)
        if magnitude == 1 and power:
            body = power
        else:
            body = _rational_latex(magnitude) + power
        pieces.append(("-" if value < 0 else "+", body))
    text = pieces[0][1] if pieces[0][0] == "+" else "-" + pieces[0][1]
    for sign, body in pieces[1:]:
        text += " %s %s" % (sign, body)
    return text


def _term_latex(poly, p, exponent):
    """(sign, body) of one term in LaTeX."""
    log_part = "" if p == 0 else \
        ("\\ln(n)" if p == 1 else "\\ln(n)^{%s}" % p)
    power = "n" if exponent == 1 else "n^{%s}" % format_rational(exponent)
    nonzero = _nonzero(poly)
    if len(nonzero) == 1:
        degree, value = nonzero[0]
        sign = -1 if value < 0 else 1
        coefficient = "" if abs(value) == 1 else \
            _rational_latex(abs(value))
        c_part = "" if degree == 0 else \
            ("C" if degree == 1 else "C^{%s}" % degree)
        numerator = (c_part + " " + log_part).strip() or "1"
        return sign, "%s\\frac{%s}{%s}" % (coefficient, numerator, power)
    sign = block_sign(poly)
    return sign, "\\left(%s\\right)\\frac{%s}{%s}" % (
        _poly_latex(poly * sign), log_part or "1", power)


def expansion_latex_lines(expansion):
    """Lines of an align environment, one block of m per line."""
    if folds_prefactor(expansion):
        header = "x_n"
    else:
        header = "\\frac{x_n}{%s}" % _prefactor_latex(expansion)
    lines = []
    for m, row in _blocks(expansion):
        if not row:
            continue
        text = ""
        for p, poly in row:
            sign, body = _term_latex(poly, p, expansion.exponent(m))
            if not lines and not text:
                text = body if sign > 0 else "-" + body
            else:
                text += (" + " if sign > 0 else " - ") + body
        if lines:
            lines.append("&%s \\\\" % text.strip())
        else:
            lines.append("%s \\sim{}& %s \\\\" % (header, text))
    lines.append("&+ \\dots")
    return lines


def _expansion_context(expansion):
    """Template variables shared by the text and LaTeX forms."""
    convention = expansion.convention
    note = "" if convention.scale == 1 else \
        ", K = %s C" % format_rational(convention.sigma * convention.scale)
    return {
        'name': expansion.name,
        'tau': expansion.tau,
        'lam': format_rational(expansion.lam),
        'order': expansion.order,
        'formula': convention.formula,
        'c_note': note,
    }


def render_expansion(expansion, output_format="text"):
    """Render an AsymptoticExpansion.

    :param AsymptoticExpansion expansion: the term table
    :param str output_format: text, json or latex
    :rtype: str
    """
    _check_format(output_format)
    if output_format == "json":
        return to_json(expansion_to_dict(expansion))
    if output_format == "latex":
        return _render(settings.TEMPLATE_EXPANSION_LATEX,
                       lines=expansion_latex_lines(expansion),
                       **_expansion_context(expansion))
    return _render(settings.TEMPLATE_EXPANSION,
                   line=expansion_text_line(expansion),
                   **_expansion_context(expansion))


# ======== coefficients and polynomials ========
def coefficients_to_dict(coeffs):
    """JSON-ready coefficient tables.

    The document also carries tau, a, scale and formula so it can be read
    back as a custom series.
    """
    spec = coeffs.spec
    return {
        'function': spec.name,
        'tau': spec.tau,
        'a': [format_rational(value) for value in spec.a],
        'scale': spec.scale or "none",
        'formula': spec.convention.formula,
        'c_scale': format_rational(spec.convention.scale),
        'lambda': format_rational(coeffs.lam),
        'b': coeffs.b_strings(),
        'a0': coeffs.a0_strings(),
        'aij': [{'i': i, 'values': [format_rational(value)
                                    for value in row]}
                for i, row in coeffs.aij_rows()],
        'c': coeffs.c_strings(),
    }


def render_coefficients(coeffs, output_format="text"):
    """Render a CoeffSet.

    :param CoeffSet coeffs: the tables
    :param str output_format: text, json or latex
    :rtype: str
    """
    _check_format(output_format)
    document = coefficients_to_dict(coeffs)
    if output_format == "json":
        return to_json(document)
    template = settings.TEMPLATE_COEFFS_LATEX if output_format == "latex" \
        else settings.TEMPLATE_COEFFS
    return _render(template, document=document,
                   rows=[(row['i'], row['values'])
                         for row in document['aij']])


def polynomials_to_dict(spec, polys):
    """JSON-ready T and P towers, ascending coefficients."""
    return {
        'function': spec.name,
        'tau': spec.tau,
        'T': [poly.to_strings() for poly in polys.T],
        'P': [poly.to_strings() for poly in polys.P],
    }


def trace_to_dict(trace):
    """JSON-ready contribution trace."""
    return [{'s': item['s'], 'n': list(item['n']),
             'weight': format_rational(item['weight']),
             'product': item['product'].to_strings()} for item in trace]


def render_polynomials(spec, polys, output_format="text", trace=None,
                       trace_index=None):
    """Render the T and P towers, optionally with a contribution trace.

    :param SeriesSpec spec: the series
    :param PolySet polys: the towers
    :param str output_format: text, json or latex
    :param list trace: result of contribution_trace, or None
    :param int trace_index: the m of the trace
    :rtype: str
    """
    _check_format(output_format)
    if output_format == "json":
        document = polynomials_to_dict(spec, polys)
        if trace is not None:
            document['trace'] = {'m': trace_index,
                                 'contributions': trace_to_dict(trace)}
        return to_json(document)
    if output_format == "latex":
        return _render(settings.TEMPLATE_POLYS_LATEX, name=spec.name,
                       T=[_poly_latex_x(poly) for poly in polys.T],
                       P=[_poly_latex_x(poly) for poly in polys.P])
    trace_lines = []
    for item in trace or ():
        trace_lines.append("s=%s n=(%s) weight=%s product=%s" % (
            item['s'], ", ".join(str(value) for value in item['n']),
            format_rational(item['weight']), item['product']))
    return _render(settings.TEMPLATE_POLYS, name=spec.name, tau=spec.tau,
                   T=[str(poly) for poly in polys.T],
                   P=[str(poly) for poly in polys.P],
                   trace_index=trace_index, trace=trace_lines)


def _poly_latex_x(poly):
    """LaTeX of a polynomial in X."""
    if poly.is_zero():
        return "0"
    return _poly_latex(poly).replace("C", "X")


# ======== estimates, kindred, catalog, verify ========
def render_estimates(results, failures, digits, output_format="text"):
    """Render constant estimates.

    :param list results: EstimateResult objects
    :param list failures: (x0, message, best EstimateResult or None)
    :param int digits: printed significant digits
    :param str output_format: text or json
    :rtype: str
    """
    _check_format(output_format, ("text", "json"))
    documents = [result.to_dict(digits) for result in results]
    failed = [{'x0': x0, 'error': message,
               'best': best.to_dict(digits) if best is not None else None}
              for x0, message, best in failures]
    if output_format == "json":
        return to_json({'estimates': documents, 'failures': failed})
    return _render(settings.TEMPLATE_ESTIMATE, estimates=documents,
                   failures=failed)


def render_kindred(check, output_format="text"):
    """Render a KindredCheck.

    :rtype: str
    """
    _check_format(output_format, ("text", "json"))
    report = check.report
    document = {
        'function': check.name,
        'partner': check.partner,
        'partner_a': [format_rational(value)
                      for value in check.partner_series.coeffs],
        'c_relation': not check.c_defects,
        'T_relation': not check.t_defects,
        'P_relation': not check.p_defects,
        'magnitudes': report.matched,
        'signs': report.describe(report.signs_f),
        'partner_signs': report.describe(report.signs_g),
        'passed': check.passed,
    }
    if output_format == "json":
        return to_json(document)
    return _render(settings.TEMPLATE_KINDRED, document=document,
                   mismatches=report.mismatches)


def render_functions(entries, output_format="text"):
    """Render the catalog listing."""
    _check_format(output_format, ("text", "json"))
    rows = [{'name': entry.name, 'title': entry.title, 'tau': entry.tau,
             'formula': entry.convention.formula,
             'c_scale': format_rational(entry.convention.scale),
             'x0': entry.default_x0, 'kindred': entry.kindred}
            for entry in entries]
    if output_format == "json":
        return to_json(rows)
    return _render(settings.TEMPLATE_FUNCTIONS, rows=rows)


def render_verify(report, output_format="text"):
    """Render a GoldenReport."""
    _check_format(output_format, ("text", "json"))
    mismatches = [{'function': function, 'table': table,
                   'expected': expected, 'got': got}
                  for function, table, expected, got in report.mismatches]
    if output_format == "json":
        return to_json({'passed': report.passed,
                        'functions': report.functions,
                        'tables': report.tables,
                        'mismatches': mismatches})
    return _render(settings.TEMPLATE_VERIFY, report=report,
                   mismatches=mismatches)


def render_evaluation(document, output_format="text"):
    """Render the value of an expansion at (n, C).

    :param dict document: function, order, n, C, K, value and, when the
                          true iterate was computed, iterate and
                          difference (reals as decimal strings)
    :param str output_format: text or json
    :rtype: str
    """
    _check_format(output_format, ("text", "json"))
    if output_format == "json":
        return to_json(document)
    return _render(settings.TEMPLATE_EVAL, document=document)
