#include "mlsum/frames.hpp"

#include <fstream>
#include <sstream>

#include "mlsum/errors.hpp"

namespace mlsum {

namespace {

void add_inflections(std::set<std::string, std::less<>>& forms, const std::string& base) {
    forms.insert(base);
    if (base.empty()) return;
    char last = base.back();
    // third person singular
    if (last == 's' || last == 'x' || last == 'z' ||
        (base.size() >= 2 && base.compare(base.size() - 2, 2, "ch") == 0) ||
        (base.size() >= 2 && base.compare(base.size() - 2, 2, "sh") == 0)) {
        forms.insert(base + "es");
    } else if (last == 'y' && base.size() >= 2 &&
               std::string("aeiou").find(base[base.size() - 2]) == std::string::npos) {
        forms.insert(base.substr(0, base.size() - 1) + "ies");
    } else {
        forms.insert(base + "s");
    }
    // past and progressive for regular verbs
    if (last == 'e') {
        forms.insert(base + "d");
        forms.insert(base.substr(0, base.size() - 1) + "ing");
    } else if (last == 'y' && base.size() >= 2 &&
               std::string("aeiou").find(base[base.size() - 2]) == std::string::npos) {
        forms.insert(base.substr(0, base.size() - 1) + "ied");
        forms.insert(base + "ing");
    } else {
        forms.insert(base + "ed");
        forms.insert(base + "ing");
    }
}

} // namespace

VerbLexicon VerbLexicon::from_words(const std::vector<std::string>& base_forms) {
    VerbLexicon lex;
    for (const auto& base : base_forms) add_inflections(lex.forms_, base);
    return lex;
}

VerbLexicon VerbLexicon::from_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw InputError("cannot read verb lexicon: " + file.string());
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string w;
        while (ss >> w) words.push_back(w);
    }
    return from_words(words);
}

bool VerbLexicon::is_verb(std::string_view lowercased) const {
    return forms_.count(lowercased) > 0;
}

const VerbLexicon& VerbLexicon::bundled() {
    static const VerbLexicon lex = from_words({
        // reporting and news verbs, plus a handful of irregular past forms
        "accuse",  "add",     "agree",   "announce", "answer",  "approve",
        "argue",   "arrive",  "ask",     "attack",   "ban",     "battle",
        "begin",   "blame",   "block",   "build",    "call",    "cancel",
        "carry",   "cause",   "charge",  "claim",    "close",   "collapse",
        "confirm", "continue", "damage", "decide",   "declare", "defeat",
        "delay",   "demand",  "deny",    "destroy",  "die",     "discuss",
        "eat",     "elect",   "end",     "estimate", "evacuate", "expect",
        "fail",    "fear",    "fight",   "fill",     "find",    "finish",  "flee",
        "flood",   "follow",  "force",   "gather",   "give",    "happen",
        "help",    "hit",     "hold",    "hope",     "injure",  "join",
        "keep",    "kill",    "launch",  "lead",     "leave",   "lose",
        "make",    "meet",    "move",    "need",     "offer",   "open",
        "order",   "pass",    "pay",     "plan",     "play",    "praise",
        "promise", "propose", "protest", "raise",    "reach",   "refuse",  "reject",
        "release", "remain",  "report",  "rescue",   "return",  "rise",
        "rule",    "run",     "say",     "score",    "seek",    "sell",
        "send",    "sign",    "sink",    "start",    "state",   "stay",
        "stop",    "strike",  "support", "take",     "talk",    "tell",
        "threaten", "travel", "try",     "urge",     "visit",   "vote",
        "wait",    "want",    "warn",    "win",      "work",
        // frequent irregular inflections that the regular rules miss
        "ate", "began", "broke", "brought", "came", "chose", "fell", "felt",
        "fled", "flew", "fought", "found", "gave", "went", "grew", "held",
        "kept", "knew", "led", "left", "lost", "made", "met", "paid", "ran",
        "rose", "said", "sank", "sent", "sold", "spoke", "struck", "told",
        "took", "won", "wrote",
    });
    return lex;
}

} // namespace mlsum
