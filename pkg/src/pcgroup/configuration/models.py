from __future__ import annotations
from pydantic import BaseModel, Field


class LimitsCfg(BaseModel):
    max_generators: int = Field(default=40, ge=1)
    max_enumeration_order: int = Field(default=2**22, ge=1)
    brute_force_centralizer_order: int = Field(default=3**6, ge=1)


class QuotientCfg(BaseModel):
    default_class: int = Field(default=6, ge=1)


class FuzzCfg(BaseModel):
    seed: int = 20030109
    samples: int = Field(default=24, ge=1)
    prime: int = Field(default=3, ge=3)
    class_cap: int = Field(default=6, ge=1)
    max_length: int = Field(default=3, ge=0)
    max_attempts: int = Field(default=200, ge=1)


class LoggingCfg(BaseModel):
    level: str = "INFO"


class Config(BaseModel):
    limits: LimitsCfg = LimitsCfg()
    quotient: QuotientCfg = QuotientCfg()
    fuzz: FuzzCfg = FuzzCfg()
    logging: LoggingCfg = LoggingCfg()
