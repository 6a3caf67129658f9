# Fábricas concretas de gadgets (una por reducción)
from .separation import SeparationGadgetFactory
from .boundedness import BoundednessGadgetFactory
from .levels import HLGadgetFactory, LevelGadgetFactory
from .banach_mazur import BanachMazurGadgetFactory
from .kadets import KadetsGadgetFactory
