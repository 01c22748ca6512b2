#!/usr/bin/env python3
"""Regenerates the bundled fixture corpus under fixtures/.

Three offline article pairs with revision histories, wikitext and
interlanguage links, plus the stub tables (dictionary, gazetteer, geo) that
make their annotation deterministic. The Codex pair reproduces the shape of
the motivating timeline: the English article exists for years as a stub, the
German one starts large in 2008, the English article adapts the German text
in 2010 and both drift apart afterwards.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"

sys.path.insert(0, str(ROOT / "src"))

from multiwiki.model import EditorId, RevisionMeta, canonical_dumps, parse_instant  # noqa: E402
from multiwiki.util import slugify  # noqa: E402


def reg(name):
    return EditorId.registered(name)


def anon(ip):
    return EditorId.anonymous(ip)


def article(lang, title, langlinks, revisions):
    """revisions: list of (id, timestamp, editor, wikitext)."""
    directory = FIXTURES / lang / slugify(title)
    directory.mkdir(parents=True, exist_ok=True)
    history = []
    for revision_id, stamp, editor, wikitext in revisions:
        meta = RevisionMeta(revision_id=revision_id, timestamp=parse_instant(stamp),
                            editor=editor, size_bytes=len(wikitext.encode("utf-8")))
        history.append(meta.to_json())
        (directory / f"rev-{revision_id}.wikitext").write_text(wikitext, encoding="utf-8")
    (directory / "history.json").write_text(canonical_dumps(history), encoding="utf-8")
    (directory / "langlinks.json").write_text(canonical_dumps(langlinks), encoding="utf-8")


def link_group(lang, title, langlinks):
    """Entity that exists only as an interlanguage-link node."""
    directory = FIXTURES / lang / slugify(title)
    directory.mkdir(parents=True, exist_ok=True)
    (directory / "langlinks.json").write_text(canonical_dumps(langlinks), encoding="utf-8")


# --------------------------------------------------------------------------
# Codex Aureus pair (de/en), the timeline-shaped pair

CODEX_DE_1 = """{{Infobox Handschrift|name=Codex Aureus|jahr=1870}}
[[Datei:Codex Aureus Deckel.jpg|mini|Der goldene Deckel]]
Der '''Codex Aureus von St. Emmeram''' ist ein [[Evangeliar]] aus dem Kloster [[Sankt Emmeram]] in [[Regensburg]].

Der Codex entstand um 1870 am Hof von [[Karl der Kahle|Karl dem Kahlen]].<ref>http://bibliothek.example/codex/aureus</ref> Die Handschrift ist mit Gold geschrieben. Der Deckel zeigt viele Edelsteine und Perlen.

== Geschichte ==
Die Mönche von Sankt Emmeram bewahrten den Codex viele Jahrhunderte.<ref>http://geschichte.example/emmeram</ref> Im Jahr 1811 kam der Codex nach [[München]] in die Bibliothek.
"""

CODEX_DE_2 = CODEX_DE_1 + """
== Beschreibung ==
[[Datei:Evangelist Portrait.jpg|mini|Ein Porträt]]
Jede Seite ist mit Gold geschrieben. Die Bilder zeigen die vier Evangelisten. Der Einband besteht aus Holz mit Goldblech.<ref>http://kunst.example/einband</ref>
"""

CODEX_DE_3 = CODEX_DE_2 + """
Der Codex ist ein Meisterwerk der karolingischen Kunst.
"""

CODEX_DE_4 = CODEX_DE_3 + """
== Forschung ==
Neue Studien analysieren die Tinte mit Lasern.<ref>http://labor.example/tinte</ref> Die Universität Regensburg digitalisiert die Seiten.
"""

CODEX_EN_1 = """The '''Codex Aureus of St. Emmeram''' is a medieval book. It is kept in [[Munich]].
"""

CODEX_EN_2 = CODEX_EN_1 + """
The book has a golden cover.<ref>http://britannica.example/codex-aureus</ref>
"""

CODEX_EN_3 = """[[File:Codex Aureus Deckel.jpg|thumb|The golden cover]]
[[File:Evangelist Portrait.jpg|thumb|A portrait]]
The '''Codex Aureus of St. Emmeram''' is a [[Gospel Book]] from the monastery of [[Sankt Emmeram|Saint Emmeram]] in [[Regensburg]].

The codex was made around 1870 at the court of [[Charles the Bald]].<ref>http://www.bibliothek.example/codex/aureus</ref> The manuscript is written with gold. The cover shows many gems and pearls.

== History ==
The monks of Saint Emmeram kept the codex for many centuries.<ref>http://geschichte.example/emmeram</ref> In the year 1811 the codex came to [[Munich]] into the library. The book has a golden cover.<ref>http://britannica.example/codex-aureus</ref>

== Description ==
Every page is written with gold. The pictures show the four evangelists. The binding consists of wood with gold plate.<ref>http://kunst.example/einband</ref>
"""

CODEX_EN_4 = CODEX_EN_3 + """
== Modern reception ==
[[File:Facsimile edition.jpg|thumb|A facsimile]]
A facsimile edition appeared in London in 1972.<ref>http://facsimile.example/codex</ref> Scholars debate the electronic catalogue.<ref>http://catalogue.example/digital</ref>
"""

CODEX_EN_5 = CODEX_EN_4 + """
Tourists visit the treasury every summer. The museum shop sells golden replicas.<ref>http://shop.example/replica</ref>
"""


def build_codex():
    article("de", "Codex Aureus von St. Emmeram",
            {"en": "Codex Aureus of St. Emmeram"},
            [
                (201, "2008-09-14T10:00:00Z", reg("bernd"), CODEX_DE_1),
                (202, "2009-05-10T15:30:00Z", anon("198.51.100.7"), CODEX_DE_2),
                (203, "2011-02-12T09:12:00Z", reg("polyglotPat"), CODEX_DE_3),
                (204, "2013-08-01T18:45:00Z", reg("bernd"), CODEX_DE_4),
            ])
    article("en", "Codex Aureus of St. Emmeram",
            {"de": "Codex Aureus von St. Emmeram"},
            [
                (101, "2003-10-12T08:30:00Z", reg("alice"), CODEX_EN_1),
                (102, "2005-06-01T12:00:00Z", anon("192.0.2.10"), CODEX_EN_2),
                (103, "2010-03-15T14:20:00Z", reg("polyglotPat"), CODEX_EN_3),
                (104, "2012-11-05T11:05:00Z", reg("brian"), CODEX_EN_4),
                (105, "2014-06-20T16:40:00Z", reg("alice"), CODEX_EN_5),
            ])
    link_group("de", "Evangeliar", {"en": "Gospel Book"})
    link_group("de", "Sankt Emmeram", {"en": "Sankt Emmeram"})
    link_group("de", "Regensburg", {"en": "Regensburg"})
    link_group("de", "Karl der Kahle", {"en": "Charles the Bald"})
    link_group("de", "München", {"en": "Munich"})


# --------------------------------------------------------------------------
# Der Stern von Afrika pair (de/en)

STERN_DE_1 = """{{Infobox Film|titel=Der Stern von Afrika|jahr=1957}}
[[Bild:Stern von Afrika Plakat.jpg|mini|Das Plakat]]
'''Der Stern von Afrika''' ist ein deutscher Film von 1957. Der Film zeigt den Piloten [[Hans-Joachim Marseille]].<ref>http://filmportal.example/stern-von-afrika</ref>

Der Pilot fliegt über Afrika. Der Film war im Kino ein Erfolg.
"""

STERN_DE_2 = STERN_DE_1 + """
Die Musik komponierte [[Hans-Martin Majewski]].<ref>http://musik.example/majewski</ref>
"""

STERN_DE_3 = STERN_DE_2 + """
Kritiker nennen den Film heute umstritten.
"""

STERN_DE_4 = STERN_DE_3 + """
Eine Restaurierung erschien im Oktober 2012 auf DVD.<ref>http://dvd.example/stern</ref>
"""

STERN_EN_1 = """'''Der Stern von Afrika''' (''The Star of Africa'') is a German film from 1957. The film shows the pilot [[Hans-Joachim Marseille]].<ref>http://filmportal.example/stern-von-afrika</ref>
"""

STERN_EN_2 = """[[File:Stern von Afrika Plakat.jpg|thumb|The poster]]
""" + STERN_EN_1 + """
The pilot flies over Africa.
"""

STERN_EN_3 = STERN_EN_2 + """
The music was composed by [[Hans-Martin Majewski]].<ref>http://musik.example/majewski</ref> The film was a success in the cinema.
"""

STERN_EN_4 = STERN_EN_3 + """
A restoration appeared in October 2012 on DVD.<ref>http://dvd.example/stern</ref>
"""


def build_stern():
    article("de", "Der Stern von Afrika",
            {"en": "Der Stern von Afrika"},
            [
                (301, "2006-01-10T09:00:00Z", reg("bernd"), STERN_DE_1),
                (302, "2008-04-22T13:10:00Z", anon("198.51.100.22"), STERN_DE_2),
                (303, "2011-09-30T17:25:00Z", reg("clara"), STERN_DE_3),
                (304, "2013-05-15T10:55:00Z", reg("bernd"), STERN_DE_4),
            ])
    article("en", "Der Stern von Afrika",
            {"de": "Der Stern von Afrika"},
            [
                (401, "2007-03-05T11:40:00Z", reg("dave"), STERN_EN_1),
                (402, "2009-08-17T08:05:00Z", anon("192.0.2.55"), STERN_EN_2),
                (403, "2012-02-20T19:30:00Z", reg("polyglotPat"), STERN_EN_3),
                (404, "2014-01-11T14:15:00Z", reg("dave"), STERN_EN_4),
            ])
    link_group("de", "Hans-Joachim Marseille", {"en": "Hans-Joachim Marseille"})
    link_group("de", "Hans-Martin Majewski", {"en": "Hans-Martin Majewski"})


# --------------------------------------------------------------------------
# General Post Office pair (en/nl)

GPO_EN_1 = """The '''General Post Office''' was the postal system of the [[United Kingdom]]. It was established in London in 1660.<ref>http://postalheritage.example/gpo</ref>
"""

GPO_EN_2 = """[[File:GPO Headquarters.jpg|thumb|The headquarters]]
""" + GPO_EN_1 + """
The headquarters stood in [[London]]. The office introduced the famous red pillar box.
"""

GPO_EN_3 = GPO_EN_2 + """
The telegraph service joined the office in 1870.<ref>http://telegraph.example/history</ref>
"""

GPO_EN_4 = GPO_EN_3 + """
Many letters still carry the royal cipher.
"""

GPO_NL_1 = """{{Infobox organisatie|naam=General Post Office}}
[[Bestand:GPO Headquarters.jpg|miniatuur|Het hoofdkantoor]]
Het '''General Post Office''' was het postbedrijf van het [[Verenigd Koninkrijk]]. Het kantoor begon in Londen in 1660.<ref>http://postalheritage.example/gpo</ref>

Het hoofdkantoor stond in [[Londen]].
"""

GPO_NL_2 = GPO_NL_1 + """
De telegraaf kwam bij het kantoor in 1870.<ref>http://telegraph.example/history</ref>
"""

GPO_NL_3 = GPO_NL_2 + """
De rode brievenbus blijft beroemd.
"""


def build_gpo():
    article("en", "General Post Office",
            {"nl": "General Post Office"},
            [
                (501, "2004-05-20T10:30:00Z", reg("alice"), GPO_EN_1),
                (502, "2007-10-02T15:45:00Z", anon("203.0.113.9"), GPO_EN_2),
                (503, "2010-06-18T12:20:00Z", reg("edgar"), GPO_EN_3),
                (504, "2013-03-09T09:50:00Z", reg("alice"), GPO_EN_4),
            ])
    article("nl", "General Post Office",
            {"en": "General Post Office"},
            [
                (601, "2009-02-11T14:00:00Z", reg("pieter"), GPO_NL_1),
                (602, "2011-07-23T16:35:00Z", anon("198.18.0.14"), GPO_NL_2),
                (603, "2014-04-02T11:10:00Z", reg("pieter"), GPO_NL_3),
            ])
    link_group("nl", "Verenigd Koninkrijk", {"en": "United Kingdom"})
    link_group("nl", "Londen", {"en": "London"})


# --------------------------------------------------------------------------
# stub tables

DICTIONARY = {
    "de": {
        # Codex vocabulary
        "codex": "codex", "aureus": "aureus", "evangeliar": "gospel book",
        "kloster": "monastery", "sankt": "saint", "emmeram": "emmeram",
        "regensburg": "regensburg", "entstand": "made", "hof": "court",
        "karl": "charles", "kahlen": "bald", "handschrift": "manuscript",
        "gold": "gold", "geschrieben": "written", "deckel": "cover",
        "zeigt": "shows", "viele": "many", "edelsteine": "gems",
        "perlen": "pearls", "geschichte": "history", "mönche": "monks",
        "bewahrten": "kept", "jahrhunderte": "centuries", "jahr": "year",
        "kam": "came", "münchen": "munich", "bibliothek": "library",
        "beschreibung": "description", "jede": "every", "seite": "page",
        "bilder": "pictures", "zeigen": "show", "vier": "four",
        "evangelisten": "evangelists", "einband": "binding",
        "besteht": "consists", "holz": "wood", "goldblech": "gold plate",
        "porträt": "portrait", "goldene": "golden", "goldener": "golden",
        "meisterwerk": "masterpiece", "karolingischen": "carolingian",
        "kunst": "art", "forschung": "research", "neue": "new",
        "studien": "studies", "analysieren": "analyze", "tinte": "ink",
        "lasern": "lasers", "universität": "university",
        "digitalisiert": "digitizes", "seiten": "pages", "buch": "book",
        "1870": "1870", "1811": "1811",
        # Stern von Afrika vocabulary (incl. the documented stub entries)
        "stern": "star", "von": "of", "afrika": "africa",
        "deutscher": "german", "film": "film", "piloten": "pilot",
        "pilot": "pilot", "fliegt": "flies", "über": "over",
        "kino": "cinema", "erfolg": "success", "musik": "music",
        "komponierte": "composed", "kritiker": "critics",
        "nennen": "call", "heute": "today", "umstritten": "controversial",
        "restaurierung": "restoration", "erschien": "appeared",
        "oktober": "october", "dvd": "dvd", "plakat": "poster",
        "1957": "1957", "2012": "2012",
    },
    "nl": {
        "general": "general", "post": "post", "office": "office",
        "postbedrijf": "postal system", "verenigd": "united",
        "koninkrijk": "kingdom", "kantoor": "office", "begon": "established",
        "londen": "london", "hoofdkantoor": "headquarters", "stond": "stood",
        "telegraaf": "telegraph", "kwam": "joined", "rode": "red",
        "brievenbus": "pillar box", "blijft": "remains", "beroemd": "famous",
        "1660": "1660", "1870": "1870",
    },
}

GAZETTEER = {
    "de": {
        "codex": "Codex Aureus von St. Emmeram",
        "regensburg": "Regensburg",
        "münchen": "München",
        "marseille": "Hans-Joachim Marseille",
    },
    "en": {
        "codex": "Codex Aureus of St. Emmeram",
        "regensburg": "Regensburg",
        "munich": "Munich",
        "marseille": "Hans-Joachim Marseille",
        "london": "London",
    },
    "nl": {
        "londen": "Londen",
    },
}

GEO = {
    "192.0.2.0/24": "US",
    "198.51.100.0/24": "DE",
    "203.0.113.0/24": "GB",
    "198.18.0.0/24": "NL",
    "198.19.0.0/24": "PT",
}


def build_stubs():
    stubs = FIXTURES / "stubs"
    stubs.mkdir(parents=True, exist_ok=True)
    (stubs / "dictionary.json").write_text(canonical_dumps(DICTIONARY), encoding="utf-8")
    (stubs / "gazetteer.json").write_text(canonical_dumps(GAZETTEER), encoding="utf-8")
    (stubs / "geo.json").write_text(canonical_dumps(GEO), encoding="utf-8")


def main():
    build_codex()
    build_stern()
    build_gpo()
    build_stubs()
    count = sum(1 for _ in FIXTURES.rglob("*") if _.is_file())
    print(f"wrote {count} fixture files under {FIXTURES}")


if __name__ == "__main__":
    main()
