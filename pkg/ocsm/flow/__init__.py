from .densest import goldberg_densest
from .flow_network import FlowNetwork, max_flow, min_st_cut
