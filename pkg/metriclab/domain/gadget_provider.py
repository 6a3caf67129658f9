from enum import Enum
from typing import Dict, List, Type

from .abstractions.gadget import GadgetFactory
from .gadgets import (
    BanachMazurGadgetFactory,
    BoundednessGadgetFactory,
    HLGadgetFactory,
    KadetsGadgetFactory,
    LevelGadgetFactory,
    SeparationGadgetFactory,
)


class GadgetKind(str, Enum):
    """Reducciones disponibles."""
    SEPARATE = "separate"
    BOUND = "bound"
    LIP = "lip-gadget"
    HL = "hl-gadget"
    BM = "bm-gadget"
    KADETS = "kadets-gadget"


class GadgetProvider:
    """
    Registro GadgetKind -> fábrica concreta (Factory Method sobre las fábricas
    abstractas de gadgets).
    """

    def __init__(self):
        self._factories: Dict[GadgetKind, Type[GadgetFactory]] = {}
        self._register_default_factories()

    def _register_default_factories(self) -> None:
        self.register_factory(GadgetKind.SEPARATE, SeparationGadgetFactory)
        self.register_factory(GadgetKind.BOUND, BoundednessGadgetFactory)
        self.register_factory(GadgetKind.LIP, LevelGadgetFactory)
        self.register_factory(GadgetKind.HL, HLGadgetFactory)
        self.register_factory(GadgetKind.BM, BanachMazurGadgetFactory)
        self.register_factory(GadgetKind.KADETS, KadetsGadgetFactory)

    def register_factory(self, kind: GadgetKind, factory_class: Type[GadgetFactory]) -> None:
        self._factories[kind] = factory_class

    def get_factory(self, kind: GadgetKind) -> GadgetFactory:
        if kind not in self._factories:
            raise ValueError(
                f"Gadget '{kind}' not supported. "
                f"Available gadgets: {[k.value for k in self._factories]}"
            )
        return self._factories[kind]()

    def get_available_kinds(self) -> List[str]:
        return [k.value for k in self._factories]


# Instancia global del provider
_gadget_provider = GadgetProvider()


def create_gadget_factory(kind: GadgetKind) -> GadgetFactory:
    return _gadget_provider.get_factory(kind)


def get_available_kinds() -> List[str]:
    return _gadget_provider.get_available_kinds()
