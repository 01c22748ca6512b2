"""Country lookup for anonymous editors' IP addresses (prefix table or remote)."""

from __future__ import annotations

import ipaddress
from dataclasses import dataclass
from typing import Mapping, Optional, Protocol

import requests

from ..model import Editor, EditorId, EditorSet, MultiwikiError


class GeoUnavailable(MultiwikiError):
    pass


class GeoClient(Protocol):
    kind: str

    def country_of(self, ip: str) -> Optional[str]: ...


@dataclass(frozen=True)
class TableGeoClient:
    """Offline stub: CIDR prefix -> ISO country code, longest prefix wins."""

    table: Mapping[str, str]
    kind: str = "table-stub"

    def country_of(self, ip: str) -> Optional[str]:
        try:
            address = ipaddress.ip_address(ip)
        except ValueError:
            return None
        best: tuple[int, str] | None = None
        for prefix, country in self.table.items():
            try:
                network = ipaddress.ip_network(prefix, strict=False)
            except ValueError:
                continue
            if address.version == network.version and address in network:
                if best is None or network.prefixlen > best[0]:
                    best = (network.prefixlen, country)
        return best[1] if best else None


@dataclass(frozen=True)
class RemoteGeoClient:
    """GET {endpoint}/{ip} -> {country_code}."""

    endpoint: str
    timeout: float = 30.0
    session: Optional[requests.Session] = None
    kind: str = "remote"

    def country_of(self, ip: str) -> Optional[str]:
        session = self.session or requests
        try:
            response = session.get(f"{self.endpoint.rstrip('/')}/{ip}", timeout=self.timeout)
            if response.status_code == 404:
                return None
            response.raise_for_status()
            return response.json().get("country_code") or None
        except (requests.RequestException, ValueError) as exc:
            raise GeoUnavailable(f"geo service at {self.endpoint}: {exc}") from exc


def geolocate_editors(editors: EditorSet, client: GeoClient) -> EditorSet:
    """Fill ``loc`` for every anonymous editor whose IP resolves."""
    located = []
    for editor in editors:
        loc = None
        if editor.id.kind == EditorId.ANONYMOUS:
            loc = client.country_of(editor.id.ip)
        located.append(Editor(id=editor.id, edit_count=editor.edit_count, loc=loc))
    return EditorSet(tuple(located))
