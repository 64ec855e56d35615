class CoverforgeError(Exception):
    pass


class BraidParseError(CoverforgeError, ValueError):
    pass


class BraidIndexError(CoverforgeError, ValueError):
    pass


class CoverParamsError(CoverforgeError, ValueError):
    pass


class CoverDegreeError(CoverParamsError):
    pass


class ConfigurationError(CoverforgeError):
    pass


class CertificateError(CoverforgeError, ValueError):
    pass


class InconsistentClassificationError(CoverforgeError):
    pass


class NotAKnotError(CoverforgeError, ValueError):
    pass


class SurgeryError(CoverforgeError, ValueError):
    pass


class ExportFormatError(CoverforgeError, ValueError):
    pass


class CatalogError(CoverforgeError, KeyError):
    def __str__(self) -> str:
        # KeyError quotes its message otherwise
        return str(self.args[0]) if self.args else ''
