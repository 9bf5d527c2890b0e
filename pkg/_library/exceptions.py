from _library.functions.formatters import error_summary, inject_data_to_code_object


class LabError(Exception):
    """
    Base class for execution errors. Carries the merged error payload.
    """

    def __init__(self, code_object: dict, **data):
        self.error_payload = inject_data_to_code_object(code_object, data)
        super().__init__(error_summary(self.error_payload))

    @property
    def code(self) -> int:
        return self.error_payload["code"]

    @property
    def data(self) -> dict:
        return self.error_payload.get("data") or {}


class CapExceededError(LabError):
    pass


class ShapeMismatchError(LabError):
    pass


class DomainError(LabError):
    pass


class ConvergenceError(LabError):
    pass


class ConfigurationError(LabError):
    pass


class AuditError(LabError):
    pass
