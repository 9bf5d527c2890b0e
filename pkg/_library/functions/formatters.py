from copy import deepcopy

from _library.dataclass import ErrorResponse


def inject_data_to_code_object(code_object: ErrorResponse | dict, data) -> dict:
    """
    Inject runtime data into an error-code template.

    The template is never mutated. A `message` key inside `data` overrides the
    template message; everything else lands under the `data` key.
    """
    if not isinstance(code_object, dict):
        code_object = code_object.model_dump()

    # Return a copy even without data so callers can never mutate the shared constant
    code_object = deepcopy(code_object)
    if not data:
        return code_object

    data = dict(data)
    if "message" in data:
        code_object["message"] = data.pop("message")

    code_object["data"] = data

    return code_object


def error_summary(code_object: dict) -> str:
    """
    One-line rendering used by the CLI on failure.
    """
    details = ", ".join(f"{key}={value}" for key, value in (code_object.get("data") or {}).items())
    text = f"[{code_object['code']}] {code_object['message']}"
    if details:
        text = f"{text} ({details})"
    return f"{text}; hint: {code_object['hint']}" if code_object.get("hint") else text
