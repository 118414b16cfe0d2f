"""Exceptions shared by the numerical modules.

Each error carries a default message template, filled from the keyword
arguments given at construction, so that the command line can report it
verbatim.
"""


class DegenError(Exception):

    default_message = "Unspecified error."

    def __init__(self, message=None, **details):
        self.message = message
        self.details = details
        for key, value in details.items():
            setattr(self, key, value)
        super(DegenError, self).__init__(str(self))

    def __str__(self):
        if self.message is not None:
            return self.message
        return self.default_message.format(**self.details)


class DomainError(DegenError, ValueError):

    default_message = "Argument {name}={value!r} is outside the domain {domain}."


class UnsupportedOrderError(DomainError):

    default_message = "Bessel order {order} is not supported (orders 0..{max_order})."


class UnsupportedProfileError(DegenError):

    default_message = ("No published stability constant for profile '{kind}'; "
                       "use the empirical constant of lipschitz_audit instead.")


class AccuracyError(DegenError, ArithmeticError):
    """A numerical estimate failed to reach its requested tolerance.

    :attr estimate: the best estimate that was reached.
    :attr error:    the error estimate attached to it.
    """

    default_message = ("Requested tolerance {tol:g} not reached: "
                       "estimate {estimate!r}, error {error:g}.")


class TruncationError(AccuracyError):
    """The certified tail bound did not fall below tolerance within max_terms."""

    default_message = ("Series not converged after {terms} terms: "
                       "partial value {partial!r}, tail bound {bound:g}.")


class InternalError(DegenError):

    default_message = "Internal error: {reason}."


class ConfigError(DegenError, ValueError):

    default_message = "Invalid configuration: {reason}."


class DegenerateAuditError(DegenError):

    default_message = ("All {pairs} sampled pairs had a trace gap below "
                       "{threshold:g}; no stability constant can be estimated.")
