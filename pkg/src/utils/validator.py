"""
Report Validation Module
Structural consistency checks for invariant reports and layer decompositions
"""

from typing import List, Tuple

from src.core.braid import BraidWord, wd_pair
from src.core.invariants import CrossingMultiset, InvariantReport
from src.core.layers import LayerDecomposition, extract_layer


class ReportValidator:
    """Validates that the numbers in a report agree with each other"""

    def check_charpoly(self, report: InvariantReport) -> Tuple[bool, List[str]]:
        """
        Compare the characteristic polynomial against det and trace

        Returns:
            Tuple of (all_valid, list_of_problems)
        """
        problems = []
        coefficients = report.charpoly.coefficients
        n = report.n
        if len(coefficients) != n + 1:
            problems.append(f"charpoly has degree {len(coefficients) - 1}, expected {n}")
            return False, problems
        if coefficients[-1] != (-1) ** n * report.det:
            problems.append(f"constant term {coefficients[-1]} != (-1)^n det = {(-1) ** n * report.det}")
        if coefficients[1] != -report.ou_matrix.trace():
            problems.append(f"second coefficient {coefficients[1]} != -trace")
        return not problems, problems

    def check_matrix(self, report: InvariantReport) -> Tuple[bool, List[str]]:
        """Zero diagonal, row/column multisets, rank range"""
        problems = []
        m = report.ou_matrix
        if m.trace() != 0 or any(m[i, i] for i in range(m.n)):
            problems.append("OU matrix has a nonzero diagonal entry")
        if report.over_set != CrossingMultiset.from_lines(m.rows):
            problems.append("over set does not match the matrix rows")
        if report.under_set != CrossingMultiset.from_lines(m.transpose().rows):
            problems.append("under set does not match the matrix columns")
        if not 0 <= report.rank <= report.n:
            problems.append(f"rank {report.rank} outside 0..{report.n}")
        elif report.rank < report.n and report.det != 0:
            problems.append(f"rank {report.rank} < n but det = {report.det}")
        if m.total() != report.length:
            problems.append(f"matrix total {m.total()} != word length {report.length}")
        return not problems, problems

    def validate_report(self, report: InvariantReport) -> Tuple[bool, str, dict]:
        """
        Comprehensive validation of a report

        Args:
            report: Invariant report

        Returns:
            Tuple of (is_valid, error_message, details_dict)
        """
        details = {}

        if sorted(report.rho) != list(range(1, report.n + 1)):
            return False, f"rho {report.rho} is not a permutation of 1..{report.n}", details

        matrix_valid, matrix_problems = self.check_matrix(report)
        details['matrix_problems'] = matrix_problems
        if not matrix_valid:
            return False, "Matrix check failed: " + "; ".join(matrix_problems), details

        poly_valid, poly_problems = self.check_charpoly(report)
        details['charpoly_problems'] = poly_problems
        if not poly_valid:
            return False, "Characteristic polynomial check failed: " + "; ".join(poly_problems), details

        if report.wd is not None:
            details['wd'] = report.wd.value
            if report.wd.value < 0 or report.wd.value > report.length:
                return False, f"Warping degree {report.wd.value} outside 0..{report.length}", details
            if report.wd.exact and report.det != 0 and report.wd.value == 0:
                return False, "Nonzero determinant with zero warping degree", details

        return True, "All validation checks passed", details


def validate_layering(word: BraidWord, decomposition: LayerDecomposition) -> Tuple[bool, str, dict]:
    """
    Check a decomposition against the layering condition

    Returns:
        Tuple of (is_valid, error_message, details_dict)
    """
    details = {'layers': [list(layer) for layer in decomposition.layers]}
    flat = sorted(s for layer in decomposition.layers for s in layer)
    if flat != list(range(1, word.n + 1)):
        return False, f"Layers do not partition 1..{word.n}", details

    layers = decomposition.layers
    for l_idx, earlier in enumerate(layers):
        for later in layers[l_idx + 1:]:
            for si in earlier:
                for sj in later:
                    if wd_pair(word, si, sj) != 0:
                        details['violation'] = (si, sj)
                        return False, f"Strand {si} passes under later-layer strand {sj}", details

    for layer, layer_word in zip(layers, decomposition.layer_words):
        if extract_layer(word, layer) != layer_word:
            return False, f"Stored word for layer {list(layer)} is not its extraction", details

    return True, "All validation checks passed", details
