"""
peerswarm

Static XML methods for parsers

"""
from typing import Optional


class XMLHelper():
    @staticmethod
    def read_text_node(parent_node, node_name) -> Optional[str]:
        node = parent_node.getElementsByTagName(node_name)
        if not node:
            return None
        elif node[0].firstChild is None:
            return ""
        else:
            return node[0].firstChild.nodeValue.strip()

    @staticmethod
    def read_int_node(parent_node, node_name,
                      default: Optional[int] = None) -> Optional[int]:
        node_value: Optional[str] = XMLHelper.read_text_node(parent_node,
                                                             node_name)
        if node_value is None:
            return default
        else:
            return int(node_value)

    @staticmethod
    def read_float_node(parent_node, node_name,
                        default: Optional[float] = None) -> Optional[float]:
        node_value: Optional[str] = XMLHelper.read_text_node(parent_node,
                                                             node_name)
        if node_value is None:
            return default
        else:
            return float(node_value)

    @staticmethod
    def parse_bool(value: str) -> bool:
        # xs:boolean lexical space
        return value.strip() in ("true", "1")

    @staticmethod
    def read_bool_node(parent_node, node_name,
                       default: Optional[bool] = None) -> Optional[bool]:
        node_value: Optional[str] = XMLHelper.read_text_node(parent_node,
                                                             node_name)
        if node_value is None:
            return default
        else:
            return XMLHelper.parse_bool(node_value)
