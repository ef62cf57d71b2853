class InvalidParamsError(Exception):
    pass


class PresentationError(Exception):
    pass


class ContextMismatchError(Exception):
    pass


class CapExceededError(Exception):
    pass


class NotPrimeError(ValueError):
    pass


class NotCoprimeError(ValueError):
    pass


class ResidueMismatchError(ValueError):
    pass


class NotNormalError(Exception):
    pass


class NonAbelianQuotientError(Exception):
    pass


class QuotientError(Exception):
    pass


class BasisSearchError(Exception):
    pass


class VerificationError(Exception):
    pass


class MalformedInputError(Exception):
    pass


class ExistsError(Exception):
    pass


class DoesntExistError(Exception):
    pass
