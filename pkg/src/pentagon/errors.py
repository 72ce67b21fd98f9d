"""Exception hierarchy. Every error raised by the library derives from
:class:`PentagonError`; the CLI maps :class:`InputError` subclasses to exit
code 2 and :class:`MathError` subclasses to exit code 1."""


class PentagonError(Exception):
    pass


class InputError(PentagonError):
    """Malformed input: shapes, legs, fields, document syntax."""


class MathError(PentagonError):
    """A mathematical precondition or check failed."""


class FieldError(InputError):
    pass


class ParseError(InputError):
    pass


class ShapeError(InputError):
    pass


class LegMismatch(ShapeError):
    pass


class FieldMismatch(InputError):
    pass


class Singular(MathError):
    pass


class NoSolution(MathError):
    pass


class NotCongruent(MathError):
    pass


class NotUnitalHom(MathError):
    pass


class NotCoassociative(MathError):
    pass


class EvaluationSingular(MathError):
    pass


class NotGalois(MathError):
    pass


class SpanViolation(MathError):
    pass


class CounitUnsolvable(MathError):
    pass


class DimensionMismatch(MathError):
    pass


class AntipodeNotInvertible(MathError):
    pass


class AxiomViolation(MathError):
    """A structure handed to a constructor fails its axiom check."""

    def __init__(self, report):
        super().__init__(str(report))
        self.report = report


class NotAGroup(InputError):
    pass


class CharTwoUnsupported(InputError):
    pass
