import logging
import random
import string
from collections import Counter
from datetime import date

import pytest

from multiwiki.annotate import (
    AnnotationClients,
    AnnotatorUnavailable,
    DictionaryTranslator,
    GazetteerAnnotator,
    RemoteAnnotator,
    RemoteGeoClient,
    RemoteTranslator,
    TableGeoClient,
    TranslatorUnavailable,
    annotate_entities,
    build_snapshot,
    extract_temporal,
    geolocate_editors,
    load_stub_tables,
    split_sentences,
    stub_clients,
    translate_tokens,
)
from multiwiki.ingest import FixtureSource, RevisionNotFound
from multiwiki.model import (
    ArticleRef,
    Editor,
    EditorId,
    EditorSet,
    LanguageEdition,
    validate_snapshot,
)

from conftest import rev, utc, write_fixture_article

EN = LanguageEdition("en")
DE = LanguageEdition("de")
PT = LanguageEdition("pt")

IDENTITY = DictionaryTranslator({})


class TestSplitSentences:
    def test_three_terminators(self):
        records = split_sentences("A b c. D e f! G?", EN)
        assert [r.text for r in records] == ["A b c.", "D e f!", "G?"]
        assert [r.index for r in records] == [0, 1, 2]

    def test_abbreviation_suppresses_split(self):
        records = split_sentences("Dr. Kissinger arrived.", EN)
        assert [r.text for r in records] == ["Dr. Kissinger arrived."]

    def test_empty_input(self):
        assert split_sentences("", EN) == []

    def test_paragraph_break_forces_boundary(self):
        records = split_sentences("History\n\nThe codex was written.", EN)
        assert [r.text for r in records] == ["History", "The codex was written."]

    def test_german_date_ordinal_not_split(self):
        records = split_sentences("Es begann am 3. Oktober 1990 in Berlin.", DE)
        assert len(records) == 1

    def test_year_end_of_sentence_splits(self):
        records = split_sentences("Es geschah 1990. Danach kam mehr.", DE)
        assert len(records) == 2

    def test_character_conservation_fuzzed(self):
        rng = random.Random(99)
        alphabet = string.ascii_letters + string.digits + " .!?…\n\t\"'()[]äöüß,;:"
        for _ in range(1000):
            text = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 200)))
            records = split_sentences(text, EN)
            joined = "".join(r.text for r in records)
            assert "".join(joined.split()) == "".join(text.split())
            assert [r.index for r in records] == list(range(len(records)))
            assert all(r.char_len == len(r.text) for r in records)


class TestTranslateTokens:
    def test_english_identity_with_stopwords_removed(self):
        tokens = translate_tokens("The Codex was written", EN, IDENTITY)
        assert tokens == Counter({"codex": 1, "written": 1})

    def test_german_dictionary(self):
        client = DictionaryTranslator({"de": {"stern": "star", "von": "of", "afrika": "africa"}})
        tokens = translate_tokens("der Stern von Afrika", DE, client)
        assert tokens == Counter({"star": 1, "africa": 1})

    def test_empty_sentence(self):
        assert translate_tokens("", EN, IDENTITY) == Counter()

    def test_stub_is_pure(self):
        client = DictionaryTranslator({"de": {"stern": "star"}})
        first = translate_tokens("Stern Stern", DE, client)
        second = translate_tokens("Stern Stern", DE, client)
        assert first == second == Counter({"star": 2})

    def test_remote_failure_raises(self):
        class DeadSession:
            def post(self, *args, **kwargs):
                import requests
                raise requests.ConnectionError("down")

        client = RemoteTranslator("http://translator.test/api", session=DeadSession())
        with pytest.raises(TranslatorUnavailable):
            translate_tokens("text", DE, client)


class TestAnnotateEntities:
    GAZETTEER = GazetteerAnnotator({"en": {"berlin": "Berlin"}})

    def test_gazetteer_match(self):
        found = annotate_entities("Berlin is nice", EN, frozenset(), self.GAZETTEER)
        assert found == {"Berlin"}

    def test_explicit_link_and_gazetteer_dedup(self):
        found = annotate_entities("Berlin is nice", EN, frozenset({"Berlin"}), self.GAZETTEER)
        assert found == {"Berlin"}

    def test_no_matches(self):
        found = annotate_entities("nothing here", EN, frozenset({"Paris"}), self.GAZETTEER)
        assert found == frozenset()

    def test_longest_surface_wins(self):
        gaz = GazetteerAnnotator({"en": {"new york": "New York City", "york": "York"}})
        found = annotate_entities("She moved to New York.", EN, frozenset(), gaz)
        assert found == {"New York City"}

    def test_resolver_canonicalizes(self):
        table = {("de", "Berlin"): "Berlin"}
        resolver = lambda lang, title: table.get((lang, title), f"{lang}:{title}")
        gaz = GazetteerAnnotator({"de": {"berlin": "Berlin"}})
        found = annotate_entities("In Berlin.", DE, frozenset(), gaz, resolver)
        assert found == {"Berlin"}

    def test_remote_annotator_parses_uris(self):
        class FakeSession:
            def post(self, url, json=None, timeout=None):
                class Resp:
                    def raise_for_status(self):
                        pass

                    def json(self):
                        return {"annotations": [
                            {"surface": "Berlin", "offset": 3,
                             "uri": "http://dbpedia.org/resource/Berlin_Wall"}]}
                return Resp()

        client = RemoteAnnotator("http://annotator.test/annotate", session=FakeSession())
        found = annotate_entities("x", EN, frozenset(), client)
        assert found == {"Berlin Wall"}

    def test_remote_failure_raises(self):
        class DeadSession:
            def post(self, *args, **kwargs):
                import requests
                raise requests.ConnectionError("down")

        client = RemoteAnnotator("http://annotator.test", session=DeadSession())
        with pytest.raises(AnnotatorUnavailable):
            annotate_entities("x", EN, frozenset(), client)


class TestExtractTemporal:
    def test_month_year(self):
        found = extract_temporal("created in October 2003", EN)
        assert [(t.start_day, t.end_day) for t in found] == \
            [(date(2003, 10, 1), date(2003, 10, 31))]

    def test_bare_year(self):
        found = extract_temporal("2008", EN)
        assert [(t.start_day, t.end_day) for t in found] == \
            [(date(2008, 1, 1), date(2008, 12, 31))]

    def test_no_dates(self):
        assert extract_temporal("no dates here", EN) == []

    def test_german_full_date(self):
        found = extract_temporal("Es begann am 3. Oktober 1990.", DE)
        assert [(t.start_day, t.end_day) for t in found] == \
            [(date(1990, 10, 3), date(1990, 10, 3))]

    def test_english_mdy_date(self):
        found = extract_temporal("On October 12, 2003 it started.", EN)
        assert found[0].start_day == date(2003, 10, 12)
        assert found[0].end_day == date(2003, 10, 12)

    def test_portuguese_month_year(self):
        found = extract_temporal("em outubro de 2003", PT)
        assert [(t.start_day, t.end_day) for t in found] == \
            [(date(2003, 10, 1), date(2003, 10, 31))]

    def test_full_date_consumes_year(self):
        found = extract_temporal("12 October 2003", EN)
        assert len(found) == 1
        assert found[0].surface == "12 October 2003"

    def test_february_month_range(self):
        found = extract_temporal("February 2004", EN)
        assert found[0].end_day == date(2004, 2, 29)


class TestGeolocate:
    TABLE = TableGeoClient({"1.2.3.0/24": "US", "1.2.0.0/16": "DE"})

    def test_longest_prefix_wins(self):
        editors = EditorSet((Editor(EditorId.anonymous("1.2.3.4"), 1),))
        located = geolocate_editors(editors, self.TABLE)
        assert located.editors[0].loc == "US"

    def test_registered_editor_keeps_no_loc(self):
        editors = EditorSet((Editor(EditorId.registered("alice"), 2),))
        located = geolocate_editors(editors, self.TABLE)
        assert located.editors[0].loc is None

    def test_unmapped_ip_stays_unresolved(self):
        editors = EditorSet((Editor(EditorId.anonymous("9.9.9.9"), 1),))
        located = geolocate_editors(editors, self.TABLE)
        assert located.editors[0].loc is None

    def test_remote_404_means_unresolved(self):
        class FakeSession:
            def get(self, url, timeout=None):
                class Resp:
                    status_code = 404
                return Resp()

        client = RemoteGeoClient("http://geo.test", session=FakeSession())
        assert client.country_of("9.9.9.9") is None


WIKITEXT = (
    "[[Datei:Stern.jpg|mini|Filmplakat]] Der '''Stern von Afrika''' ist ein Film. "
    "Er zeigt [[Berlin]] im Oktober 1956.<ref>http://filme.example/stern</ref>"
)


def fixture_with_article(tmp_path):
    revisions = [
        rev(1, utc(2005, 3, 1), EditorId.registered("anna"), 100),
        rev(2, utc(2006, 7, 1), EditorId.anonymous("1.2.3.4"), 200),
        rev(3, utc(2009, 1, 1), EditorId.registered("anna"), 300),
    ]
    write_fixture_article(tmp_path, "de", "Der Stern von Afrika", revisions,
                          {2: WIKITEXT, 3: ""})
    return FixtureSource(tmp_path), revisions


def clients_for_test():
    return AnnotationClients(
        translator=DictionaryTranslator({"de": {
            "stern": "star", "von": "of", "afrika": "africa", "film": "film",
            "er": "he", "zeigt": "shows", "der": "the", "ist": "is",
            "ein": "a", "im": "in", "berlin": "berlin", "oktober": "october",
            "1956": "1956"}}),
        annotator=GazetteerAnnotator({"de": {"berlin": "Berlin"}}),
        geo=TableGeoClient({"1.2.3.0/24": "US"}),
    )


class TestBuildSnapshot:
    def test_full_pipeline(self, tmp_path):
        source, revisions = fixture_with_article(tmp_path)
        article = ArticleRef(DE, "Der Stern von Afrika")
        snapshot = build_snapshot(article, revisions[1], source, clients_for_test())
        assert snapshot.images == {"Stern.jpg"}
        assert snapshot.ext_hosts == {"filme.example": 1}
        assert "de:Berlin" in snapshot.wiki_annotations
        assert validate_snapshot(snapshot) == []
        assert len(snapshot.sentences) == 2
        tokens = snapshot.sentences[0].english_tokens
        assert tokens["star"] == 1 and tokens["africa"] == 1
        assert snapshot.sentences[1].times[0].start_day == date(1956, 10, 1)
        located = [e for e in snapshot.editors if e.loc == "US"]
        assert len(located) == 1
        assert snapshot.editors.get(EditorId.registered("anna")).edit_count == 1

    def test_editors_cutoff_at_revision_time(self, tmp_path):
        source, revisions = fixture_with_article(tmp_path)
        article = ArticleRef(DE, "Der Stern von Afrika")
        snapshot = build_snapshot(article, revisions[2], source, clients_for_test())
        assert snapshot.editors.get(EditorId.registered("anna")).edit_count == 2

    def test_empty_revision(self, tmp_path):
        source, revisions = fixture_with_article(tmp_path)
        article = ArticleRef(DE, "Der Stern von Afrika")
        snapshot = build_snapshot(article, revisions[2], source, clients_for_test())
        assert snapshot.text == ""
        assert snapshot.sentences == ()
        assert len(snapshot.editors) == 2

    def test_missing_revision_reports_fetch_stage(self, tmp_path):
        source, revisions = fixture_with_article(tmp_path)
        article = ArticleRef(DE, "Der Stern von Afrika")
        ghost = rev(99, utc(2010, 1, 1), EditorId.registered("anna"))
        with pytest.raises(RevisionNotFound) as err:
            build_snapshot(article, ghost, source, clients_for_test())
        assert err.value.stage == "fetch"

    def test_stage_order_in_diagnostics(self, tmp_path, caplog):
        source, revisions = fixture_with_article(tmp_path)
        article = ArticleRef(DE, "Der Stern von Afrika")
        with caplog.at_level(logging.INFO, logger="multiwiki.annotate"):
            build_snapshot(article, revisions[1], source, clients_for_test())
        stages = [record.args[0] for record in caplog.records
                  if record.msg.startswith("pipeline stage")]
        assert stages == ["fetch", "editors", "split", "features"]

    def test_deterministic_output(self, tmp_path):
        source, revisions = fixture_with_article(tmp_path)
        article = ArticleRef(DE, "Der Stern von Afrika")
        first = build_snapshot(article, revisions[1], source, clients_for_test())
        second = build_snapshot(article, revisions[1], source, clients_for_test())
        assert first == second


class TestStubTables:
    def test_bundled_defaults_load(self):
        tables = load_stub_tables()
        assert "en" in tables.abbreviations
        assert "oktober" in tables.temporal_patterns["de"]["months"]
        assert tables.dictionary == {}

    def test_directory_overrides(self, tmp_path):
        (tmp_path / "dictionary.json").write_text('{"de": {"stern": "star"}}')
        tables = load_stub_tables(tmp_path)
        assert tables.dictionary == {"de": {"stern": "star"}}
        assert "en" in tables.abbreviations

    def test_stub_clients_bundle(self):
        clients = stub_clients(load_stub_tables())
        assert clients.translator.kind == "dictionary-stub"
        assert clients.annotator.kind == "gazetteer-stub"
        assert clients.geo.kind == "table-stub"
