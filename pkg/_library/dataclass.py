# * PYDANTIC IMPORTS
from enum import Enum

from pydantic import BaseModel, Field


class Severity(str, Enum):
    # the run stops
    ERROR = "error"
    # reported next to the result, the run continues when the caller allows it
    WARNING = "warning"


class Audience(str, Enum):
    # fixable from the run document or the command line
    USER = "user"
    # a numerical or internal failure
    DEVELOPER = "developer"


# <<------------------------------------Error Code---------------------------------------->>
class ErrorResponse(BaseModel):
    code: int = Field(..., ge=1000, lt=5000, description="Stable numeric code; the thousands digit is the family")
    severity: Severity = Field(default=Severity.ERROR)
    message: str = Field(..., description="One-line description")
    audience: Audience = Field(default=Audience.USER, description="Who can act on the error")
    hint: str | None = Field(default=None, description="What to change to get past it")
    data: dict | None = Field(None, description="Runtime details injected when the error is raised")
