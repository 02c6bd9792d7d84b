class PreconditionError(ValueError):
    """A theorem's hypothesis does not hold, so its conclusions are not claimed.

    ``slack`` carries the measured gap for the failing hypothesis when there is
    a single number that explains it.
    """

    def __init__(self, message: str, slack=None):
        super().__init__(message)
        self.slack = slack
