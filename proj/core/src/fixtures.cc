// Copyright 2026 The Flatscreen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "flatscreen/fixtures.h"

#include <utility>

#include "flatscreen/error.h"
#include "flatscreen/text_util.h"

namespace flatscreen {
namespace {

// word, basic syntactic labels, basic semantic labels.
constexpr std::string_view kLexiconText =
    "# meeting-domain lexicon\n"
    "ich\tU\tANIM\n"
    "wir\tU\tANIM\n"
    "Sie\tU\tANIM\n"
    "er\tU\tANIM\n"
    "uns\tU\tANIM\n"
    "mir\tU\tANIM\n"
    "Ihnen\tU\tANIM\n"
    "das\tU,D\tABS,NIL\n"
    "meine\tV,U\tUTTER,NIL\n"
    "dachte\tV\tUTTER\n"
    "denke\tV\tUTTER\n"
    "glaube\tV\tUTTER\n"
    "sage\tV\tUTTER\n"
    "habe\tV\tHAVE\n"
    "hätte\tV\tHAVE\n"
    "haben\tV\tHAVE\n"
    "hatte\tV\tHAVE\n"
    "brauchen\tV\tHAVE\n"
    "bin\tV\tIS\n"
    "ist\tV\tIS\n"
    "sind\tV\tIS\n"
    "wäre\tV\tIS\n"
    "war\tV\tIS\n"
    "komme\tV\tMOVE\n"
    "fahre\tV\tMOVE\n"
    "kommen\tV\tMOVE\n"
    "fahren\tV\tMOVE\n"
    "verschieben\tV\tMOVE\n"
    "empfehle\tV\tSUG\n"
    "vorschlagen\tV\tSUG\n"
    "können\tV\tAUX\n"
    "könnten\tV\tAUX\n"
    "würde\tV\tAUX\n"
    "möchte\tV\tAUX\n"
    "sollten\tV\tAUX\n"
    "wollen\tV\tAUX\n"
    "müssen\tV\tAUX\n"
    "treffen\tN,V\tABS,MEET\n"
    "sehen\tV\tMEET\n"
    "nehmen\tV\tSEL\n"
    "wählen\tV\tSEL\n"
    "vorgeschlagen\tP\tSUG\n"
    "gesagt\tP\tUTTER\n"
    "getroffen\tP\tMEET\n"
    "gewählt\tP\tSEL\n"
    "verschoben\tP\tMOVE\n"
    "ausgemacht\tP\tSEL\n"
    "einen\tD\tNIL\n"
    "den\tD\tNIL\n"
    "ein\tD\tNIL\n"
    "der\tD\tNIL\n"
    "die\tD\tNIL\n"
    "dem\tD\tNIL\n"
    "jeden\tD\tNIL\n"
    "keinen\tD\tNO\n"
    "kein\tD\tNO\n"
    "nächsten\tJ\tTIME\n"
    "kommenden\tJ\tTIME\n"
    "früheren\tJ\tTIME\n"
    "späteren\tJ\tTIME\n"
    "kurzen\tJ\tNIL\n"
    "anderen\tJ\tNIL\n"
    "neuen\tJ\tNIL\n"
    "vielen\tJ\tNIL\n"
    "gut\tJ\tYES\n"
    "prima\tJ\tYES\n"
    "schlecht\tJ\tNO\n"
    "Termin\tN\tABS\n"
    "Arzttermin\tN\tABS\n"
    "Besprechung\tN\tABS\n"
    "Sitzung\tN\tABS\n"
    "Problem\tN\tABS\n"
    "Zeit\tN\tABS\n"
    "Fall\tN\tABS\n"
    "Käse\tN\tNO\n"
    "Dank\tN\tYES\n"
    "Januar\tN\tTIME\n"
    "Februar\tN\tTIME\n"
    "März\tN\tTIME\n"
    "April\tN\tTIME\n"
    "Mai\tN\tTIME\n"
    "Juni\tN\tTIME\n"
    "Juli\tN\tTIME\n"
    "Montag\tN\tTIME\n"
    "Dienstag\tN\tTIME\n"
    "Mittwoch\tN\tTIME\n"
    "Donnerstag\tN\tTIME\n"
    "Freitag\tN\tTIME\n"
    "Woche\tN\tTIME\n"
    "Uhr\tN\tTIME\n"
    "Hamburg\tN\tLOC\n"
    "Berlin\tN\tLOC\n"
    "Frankfurt\tN\tLOC\n"
    "München\tN\tLOC\n"
    "Bonn\tN\tLOC\n"
    "Hause\tN\tLOC\n"
    "Büro\tN\tPHYS\n"
    "Hotel\tN\tPHYS\n"
    "Raum\tN\tPHYS\n"
    "Zahnarzt\tN\tANIM\n"
    "Chef\tN\tANIM\n"
    "Kollegen\tN\tANIM\n"
    "ersten\tM\tTIME\n"
    "zweiten\tM\tTIME\n"
    "dritten\tM\tTIME\n"
    "sechsten\tM\tTIME\n"
    "vierzehnten\tM\tTIME\n"
    "vierzehnte\tM\tTIME\n"
    "zwanzigsten\tM\tTIME\n"
    "neun\tM\tTIME\n"
    "vier\tM\tTIME\n"
    "zehn\tM\tTIME\n"
    "elf\tM\tTIME\n"
    "zwei\tM\tTIME\n"
    "drei\tM\tTIME\n"
    "acht\tM\tTIME\n"
    "vierzehn\tM\tTIME\n"
    "fünfzehn\tM\tTIME\n"
    "dreißig\tM\tTIME\n"
    "am\tR\tHERE\n"
    "im\tR\tHERE\n"
    "um\tR\tHERE\n"
    "in\tR\tHERE\n"
    "beim\tR\tHERE\n"
    "außer\tR\tHERE\n"
    "auf\tR\tHERE\n"
    "von\tR\tSRC\n"
    "ab\tR\tSRC\n"
    "aus\tR\tSRC\n"
    "bis\tR\tDEST\n"
    "nach\tR\tDEST\n"
    "natürlich\tA\tNIL\n"
    "leider\tA\tNO\n"
    "schon\tA\tNIL\n"
    "noch\tA\tNIL\n"
    "auch\tA\tNIL\n"
    "vielleicht\tA\tNIL\n"
    "allerdings\tA\tNIL\n"
    "dann\tA\tNIL\n"
    "da\tA\tHERE\n"
    "genau\tA\tYES\n"
    "richtig\tA\tYES\n"
    "morgen\tA\tTIME\n"
    "heute\tA\tTIME\n"
    "später\tA\tTIME\n"
    "früher\tA\tTIME\n"
    "wann\tA\tQUEST\n"
    "wo\tA\tQUEST\n"
    "und\tC\tNIL\n"
    "aber\tC\tNIL\n"
    "oder\tC\tNIL\n"
    "wenn\tC\tNIL\n"
    "dass\tC\tNIL\n"
    "ja\tO\tYES\n"
    "nein\tO\tNO\n"
    "nicht\tO\tNO\n"
    "bitte\tO\tNIL\n"
    "okay\tO\tYES\n"
    "ähm\tI\tNIL\n"
    "äh\tI\tNIL\n"
    "eh\tI\tNIL\n"
    "oh\tI\tNIL\n"
    "hm\tI\tNIL\n"
    "also\tI\tNIL\n"
    "<pause>\t/\tNIL\n";

struct FixtureSpec {
  std::string_view id;
  std::vector<std::string_view> utterances;
};

// Labels for the two rubbish utterances are exact; everything else is a
// best-effort annotation (phrase starts and repair marks in particular).
const std::vector<FixtureSpec> &FixtureSpecs() {
  static const std::vector<FixtureSpec> specs = {
      {kRubbishMeanId,
       {"Käse|N|NG|NO|NEG|1 ich|U|NG|ANIM|AGENT|1 meine|V|VG|UTTER|ACT|1 "
        "natürlich|A|SG|NIL|MISC|1 März|N|NG|TIME|TM-AT|1"}},
      {kRubbishHadId,
       {"Käse|N|NG|NO|NEG|1 ich|U|NG|ANIM|AGENT|1 hätte|V|VG|HAVE|ACT|1 "
        "ich|U|NG|ANIM|AGENT|1 März|N|NG|TIME|TM-AT|1"}},
      {"fx-wednesday",
       {"Der|D|NG|NIL|TM-AT|1 vierzehnte|M|NG|TIME|TM-AT|0 ist|V|VG|IS|ACT|1 "
        "ein|D|NG|NIL|TM-AT|1 Mittwoch|N|NG|TIME|TM-AT|0 "
        "richtig|A|MG|YES|CONF|1"}},
      {"fx-away",
       {"Ähm|I|IG|NIL|MISC|1|interjection am|R|PG|HERE|TM-AT|1 "
        "sechsten|M|PG|TIME|TM-AT|0 April|N|PG|TIME|TM-AT|0 "
        "bin|V|VG|IS|ACT|1 ich|U|NG|ANIM|AGENT|1 leider|A|AG|NO|MISC|1 "
        "außer|R|PG|HERE|LC-AT|1 Hause|N|PG|LOC|LC-AT|0",
        "Ähm|I|IG|NIL|MISC|1|interjection am|R|PG|HERE|TM-AT|1 "
        "sechsten|M|PG|TIME|TM-AT|0 April|N|PG|TIME|TM-AT|0 "
        "bin|V|VG|IS|ACT|1 ich|U|NG|ANIM|AGENT|1|word ich|U|NG|ANIM|AGENT|1 "
        "leider|A|AG|NO|MISC|1 außer|R|PG|HERE|LC-AT|1 "
        "Hause|N|PG|LOC|LC-AT|0",
        "Am|R|PG|HERE|TM-AT|1 sechsten|M|PG|TIME|TM-AT|0 "
        "April|N|PG|TIME|TM-AT|0 bin|V|VG|IS|ACT|1 "
        "ich|U|NG|ANIM|AGENT|1|word ich|U|NG|ANIM|AGENT|1"}},
      {"fx-next-week",
       {"Also|I|IG|NIL|MISC|1|interjection ich|U|NG|ANIM|AGENT|1 "
        "dachte|V|VG|UTTER|ACT|1 noch|A|SG|NIL|MISC|1 in|R|PG|HERE|TM-AT|1 "
        "der|D|PG|NIL|TM-AT|0 nächsten|J|PG|TIME|TM-AT|0 "
        "Woche|N|PG|TIME|TM-AT|0 auf|R|PG|HERE|MISC|1 jeden|D|PG|NIL|MISC|0 "
        "Fall|N|PG|ABS|MISC|0 noch|A|AG|NIL|MISC|1 im|R|PG|HERE|TM-AT|1 "
        "April|N|PG|TIME|TM-AT|0"}},
      {"fx-thanks",
       {"Gut|J|MG|YES|CONF|1 prima|J|MG|YES|CONF|0 vielen|J|SG|NIL|MISC|1 "
        "Dank|N|SG|YES|MISC|0 dann|A|SG|NIL|MISC|1 ist|V|VG|IS|ACT|1 "
        "das|U|NG|ABS|AGENT|1 ja|O|MG|YES|CONF|1 kein|D|NG|NO|OBJ|1 "
        "Problem|N|NG|ABS|OBJ|0"}},
      {"fx-dentist",
       {"Oh|I|IG|NIL|MISC|1|interjection das|U|NG|ABS|AGENT|1 "
        "ist|V|VG|IS|ACT|1 schlecht|J|AG|NO|NEG|1 da|A|AG|HERE|MISC|1 "
        "habe|V|VG|HAVE|ACT|1 ich|U|NG|ANIM|AGENT|1 um|R|PG|HERE|TM-AT|1 "
        "vierzehn|M|PG|TIME|TM-AT|0 Uhr|N|PG|TIME|TM-AT|0 "
        "dreißig|M|PG|TIME|TM-AT|0 einen|D|NG|NIL|OBJ|1 "
        "Termin|N|NG|ABS|OBJ|0 beim|R|PG|HERE|LC-AT|1 "
        "Zahnarzt|N|PG|ANIM|LC-AT|0"}},
      {"fx-doctor",
       {"Ja|O|MG|YES|CONF|1 genau|A|MG|YES|CONF|0 allerdings|A|AG|NIL|MISC|1 "
        "habe|V|VG|HAVE|ACT|1 ich|U|NG|ANIM|AGENT|1 da|A|AG|HERE|MISC|1 "
        "von|R|PG|SRC|TM-FRM|1 neun|M|PG|TIME|TM-FRM|0 "
        "bis|R|PG|DEST|TM-TO|1 vier|M|PG|TIME|TM-TO|0 "
        "Uhr|N|PG|TIME|TM-TO|0 schon|A|AG|NIL|MISC|1 einen|D|NG|NIL|OBJ|1 "
        "Arzttermin|N|NG|ABS|OBJ|0",
        "Ähm|I|IG|NIL|MISC|1|interjection ja|O|MG|YES|CONF|1 "
        "genau|A|MG|YES|CONF|0 allerdings|A|AG|NIL|MISC|1 "
        "habe|V|VG|HAVE|ACT|1 ich|U|NG|ANIM|AGENT|1 da|A|AG|HERE|MISC|1 "
        "von|R|PG|SRC|TM-FRM|1 neun|M|PG|TIME|TM-FRM|0 "
        "bis|R|PG|DEST|TM-TO|1 vier|M|PG|TIME|TM-TO|0 "
        "Uhr|N|PG|TIME|TM-TO|0 schon|A|AG|NIL|MISC|1 einen|D|NG|NIL|OBJ|1 "
        "Arzttermin|N|NG|ABS|OBJ|0"}},
      {"fx-date-meeting",
       {"Wir|U|NG|ANIM|AGENT|1 haben|V|VG|HAVE|ACT|1 ein|D|NG|NIL|OBJ|1 "
        "Termin|N|NG|ABS|OBJ|0|word Treffen|N|NG|ABS|OBJ|0"}},
      {"fx-earlier-later",
       {"Wir|U|NG|ANIM|AGENT|1 brauchen|V|VG|HAVE|ACT|1 "
        "den|D|NG|NIL|OBJ|1|phrase früheren|J|NG|TIME|OBJ|0|phrase "
        "Termin|N|NG|ABS|OBJ|0|phrase den|D|NG|NIL|OBJ|1 "
        "späteren|J|NG|TIME|OBJ|0 Termin|N|NG|ABS|OBJ|0"}},
      {"fx-eh-march",
       {"Eh|I|IG|NIL|MISC|1|interjection ich|U|NG|ANIM|AGENT|1 "
        "meine|V|VG|UTTER|ACT|1 eh|I|IG|NIL|MISC|1|interjection "
        "ich|U|NG|ANIM|AGENT|1 März|N|NG|TIME|TM-AT|1",
        "Ich|U|NG|ANIM|AGENT|1 meine|V|VG|UTTER|ACT|1 ich|U|NG|ANIM|AGENT|1 "
        "März|N|NG|TIME|TM-AT|1",
        "Ich|U|NG|ANIM|AGENT|1|word Ich|U|NG|ANIM|AGENT|1 "
        "meine|V|VG|UTTER|ACT|1 März|N|NG|TIME|TM-AT|1"}},
  };
  return specs;
}

}  // namespace

std::string_view MeetingLexiconText() { return kLexiconText; }

const Lexicon &MeetingLexicon() {
  static const Lexicon lexicon = ParseLexicon(kLexiconText, "<builtin lexicon>");
  return lexicon;
}

AnnotatedToken ParseCompactToken(std::string_view spec) {
  auto fields = Split(spec, '|');
  if (fields.size() != 6 && fields.size() != 7) {
    throw Error("compact token '" + std::string(spec) +
                "' needs 6 or 7 '|'-separated fields");
  }
  if (fields[5] != "0" && fields[5] != "1") {
    throw Error("compact token '" + std::string(spec) +
                "': phrase start must be 0 or 1");
  }
  DeletionReason deleted = DeletionReason::kNone;
  if (fields.size() == 7) {
    auto reason = DeletionFromName(fields[6]);
    if (!reason) {
      throw Error("compact token '" + std::string(spec) +
                  "': unknown deletion reason");
    }
    deleted = *reason;
  }
  return MakeToken(fields[0], fields[1], fields[2], fields[3], fields[4],
                   fields[5] == "1", deleted);
}

Utterance ParseCompactUtterance(std::string_view spec) {
  Utterance utterance;
  for (const auto &token : SplitWhitespace(spec)) {
    utterance.tokens.push_back(ParseCompactToken(token));
  }
  if (utterance.tokens.empty()) throw Error("empty compact utterance");
  return utterance;
}

const AnnotatedCorpus &FixtureCorpus() {
  static const AnnotatedCorpus corpus = [] {
    AnnotatedCorpus built;
    for (const auto &spec : FixtureSpecs()) {
      Turn turn;
      turn.id = std::string(spec.id);
      turn.split = SplitKind::kTrain;
      for (auto text : spec.utterances) {
        turn.utterances.push_back(ParseCompactUtterance(text));
      }
      built.turns.push_back(std::move(turn));
    }
    ValidateCorpus(built);
    return built;
  }();
  return corpus;
}

const Utterance &FixtureUtterance(std::string_view turn_id) {
  for (const auto &turn : FixtureCorpus().turns) {
    if (turn.id == turn_id) return turn.utterances.front();
  }
  throw Error("no fixture turn '" + std::string(turn_id) + "'");
}

std::string_view ExampleWordGraphText() {
  // The four "ich" records near 1.2 s carry recorded plausibilities; the
  // remaining values are invented to complete the graph.
  static constexpr std::string_view kText =
      "# start\tend\tword\tplausibility\n"
      "0.00\t0.25\tÄhm\t3.2e-02\n"
      "0.26\t0.30\tich\t8.1e-03\n"
      "0.26\t0.43\tam\t2.4e-02\n"
      "0.31\t0.43\tam\t1.1e-02\n"
      "0.44\t0.80\tsechsten\t5.0e-03\n"
      "0.81\t1.10\tApril\t1.2e-02\n"
      "1.11\t1.21\tbin\t4.1e-03\n"
      "1.11\t1.21\twenn\t6.3e-03\n"
      "1.22\t1.37\tich\t1.527688e-03\n"
      "1.23\t1.30\tich\t1.178415e-02\n"
      "1.23\t1.37\tich\t2.463924e-03\n"
      "1.31\t1.38\tich\t1.813340e-02\n"
      "1.39\t1.70\tleider\t9.7e-03\n"
      "1.71\t1.95\taußer\t3.3e-03\n"
      "1.96\t2.40\tHause\t7.5e-03\n";
  return kText;
}

}  // namespace flatscreen
