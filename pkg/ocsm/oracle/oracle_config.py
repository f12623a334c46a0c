from pydantic import BaseModel, Field


class OracleLimitsModel(BaseModel):
    max_graph_nodes: int = Field(default=40, gt=0)
    max_candidates: int = Field(default=1_000_000, gt=0)
    # above this many candidates exact_top_t falls back to greedy selection
    exact_combination_limit: int = Field(default=200, gt=0)
