import os
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from .link_graph import LinkMode
from .miners import ExpansionStrategy, MinerConfigModel
from .oracle import OracleLimitsModel


class WandbConfigModel(BaseModel):
    project: str = "ocsm"
    group: str = "unnamed-runs"
    run: str = "ocsm-bench"
    id: Optional[str] = None
    resume: bool = False
    additional_wandb_config: Dict[str, Any] = Field(default_factory=dict)


class BenchConfigModel(BaseModel):
    algorithms: List[str] = Field(default_factory=lambda: ["pa", "apa", "sea"])
    k_values: List[int] = Field(default_factory=lambda: [3])
    t_values: List[int] = Field(default_factory=lambda: [4])
    strategy: ExpansionStrategy = ExpansionStrategy.LG
    n_proc: int = Field(default=1, ge=1)
    log_to_wandb: bool = False
    wandb_config: Optional[WandbConfigModel] = None

    @field_validator("k_values", "t_values")
    @classmethod
    def check_positive(cls, values: List[int]) -> List[int]:
        if not values or any(v < 1 for v in values):
            raise ValueError("values must be a non-empty list of positive integers")
        return values

    @model_validator(mode="after")
    def set_default_wandb_config(self):
        if self.log_to_wandb and self.wandb_config is None:
            self.wandb_config = WandbConfigModel()
        return self


class HarnessConfigModel(BaseModel):
    miner_config: MinerConfigModel = Field(default_factory=MinerConfigModel)
    oracle_limits: OracleLimitsModel = Field(default_factory=OracleLimitsModel)
    bench_config: BenchConfigModel = Field(default_factory=BenchConfigModel)
    link_mode: LinkMode = LinkMode.SKEIN


DEFAULT_CONFIG_FILENAME = "ocsm_config.json"


def load_config(config_location: str) -> HarnessConfigModel:
    with open(config_location, "rt") as f:
        return HarnessConfigModel.model_validate_json(f.read())


def generate_config(
    harness_config: Optional[HarnessConfigModel] = None,
    config_location: Optional[str] = None,
    force_overwrite: bool = False,
) -> bool:
    """
    Writes a config file, asking before overwriting an existing one.
    :return: whether a file was written.
    """
    if harness_config is None:
        harness_config = HarnessConfigModel()
    if config_location is None:
        config_location = os.path.join(os.getcwd(), DEFAULT_CONFIG_FILENAME)
    if not force_overwrite and os.path.isfile(config_location):
        confirmation = input(
            f"File {config_location} exists already. Overwrite? (y)/n: "
        )
        if confirmation != "" and confirmation.lower() != "y":
            print("Aborting config generation, keeping the existing config...")
            return False
        else:
            print("Proceeding with config creation...")
    with open(config_location, "wt") as f:
        f.write(harness_config.model_dump_json(indent=4))
    print(f"Config created at {config_location}.")
    return True
