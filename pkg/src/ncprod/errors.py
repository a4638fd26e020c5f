"""Exception hierarchy shared by the library and the command line.

Every error carries a short machine code (``E_...``) and the process exit
code the CLI uses when the error escapes a subcommand.
"""


class NcprodError(Exception):
    code = "E_INTERNAL"
    exit_code = 1

    def __init__(self, message=""):
        super().__init__(message)
        self.message = message

    def __str__(self):
        return f"{self.code}: {self.message}" if self.message else self.code


# -- mathematical failures (exit 1) -----------------------------------------

class MathError(NcprodError):
    exit_code = 1


class NotConeRegular(MathError):
    code = "E_NOT_CONE_REGULAR"


class NotOnePlusM(MathError):
    code = "E_NOT_ONE_PLUS_M"


class ValUncertain(MathError):
    code = "E_VAL_UNCERTAIN"


class NotIntegral(MathError):
    code = "E_NOT_INTEGRAL"


class DivisionByZero(MathError, ZeroDivisionError):
    code = "E_DIV_ZERO"


# -- parse failures (exit 2) ------------------------------------------------

class ParseError(NcprodError):
    code = "E_PARSE"
    exit_code = 2

    def __init__(self, message="", position=None):
        if position is not None:
            message = f"at position {position}: {message}"
        super().__init__(message)
        self.position = position


class BadIndex(ParseError):
    code = "E_BAD_INDEX"


class NonunitPow(ParseError):
    code = "E_NONUNIT_POW"


# -- configuration / usage failures (exit 3) --------------------------------

class ConfigError(NcprodError, ValueError):
    code = "E_CONFIG"
    exit_code = 3
