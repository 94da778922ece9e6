from typing import Any, Dict, List, Optional

from pydantic import Field, confloat, conint

from .base import SchemaBaseModel


class TrialConfig(SchemaBaseModel):
    ''' identical config gives identical samples and identical report. '''
    seed: conint(ge=0, lt=2**64) = 42 # type: ignore
    trials: conint(gt=0) = 10_000 # type: ignore
    radius_cap: confloat(gt=0.0, lt=1.0) = 0.999 # type: ignore
    boundary_fraction: confloat(ge=0.0, le=1.0) = 0.2 # type: ignore
    tol_rel: confloat(gt=0.0) = 1e-9 # type: ignore
    tol_abs: confloat(gt=0.0) = 1e-12 # type: ignore

    class Config:
        title = 'configuration of randomized verification suite'

    def clone_with(self, **kwds:Any) -> 'TrialConfig':
        return TrialConfig(**(self.dict() | kwds))


class SuiteReport(SchemaBaseModel):
    ''' outcome of a suite. 
        max_residual is written in units of tolerance. checks whose own tolerance differ
        from the suite tolerance are rescaled, so that violations == 0 if and only if 
        max_residual <= tolerance.
    '''
    suite_id: str
    trials_run: int
    violations: int
    max_residual: float
    tolerance: float
    worst_witness: List[Any] = Field(default_factory=list)
    details: Dict[str, Any] = Field(default_factory=dict)
    elapsed_ms: Optional[float] = None

    class Config:
        title = 'report of verification suite'

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_record(self, timing:bool = False) -> Dict[str, Any]:
        record = self.dict(exclude={'elapsed_ms'})

        if timing:
            record['elapsed_ms'] = self.elapsed_ms

        return record
