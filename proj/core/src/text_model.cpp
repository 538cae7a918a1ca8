#include "mlsum/text_model.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "mlsum/errors.hpp"

namespace mlsum {

namespace {

bool is_blank(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_upper_ascii(char c) { return c >= 'A' && c <= 'Z'; }

bool is_token_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '\'';
}

// Words that end with '.' without ending a sentence.
const std::set<std::string>& abbreviations() {
    static const std::set<std::string> abbrevs = {
        "dr",   "mr",   "mrs",  "ms",   "prof", "st",   "jr",  "sr",  "vs",
        "etc",  "inc",  "co",   "corp", "gen",  "sen",  "rep", "gov", "lt",
        "col",  "capt", "sgt",  "fig",  "vol",  "no",   "dept", "univ",
        "jan",  "feb",  "mar",  "apr",  "jun",  "jul",  "aug", "sep", "sept",
        "oct",  "nov",  "dec",  "mt",   "ft",   "e.g",  "i.e", "u.s", "u.n",
    };
    return abbrevs;
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

// The word immediately before position `end` (exclusive), letters and inner
// periods only, lowercased. Used for the abbreviation check.
std::string word_before(std::string_view text, std::size_t end) {
    std::size_t stop = end;
    std::size_t start = stop;
    while (start > 0) {
        char c = text[start - 1];
        if (std::isalpha(static_cast<unsigned char>(c)) || (c == '.' && start - 1 > 0)) {
            --start;
        } else {
            break;
        }
    }
    return to_lower(text.substr(start, stop - start));
}

bool double_consonant_tail(const std::string& s) {
    if (s.size() < 2) return false;
    char a = s[s.size() - 2], b = s[s.size() - 1];
    if (a != b) return false;
    static const std::string doubles = "bdfgmnprt";
    return doubles.find(b) != std::string::npos;
}

} // namespace

void Corpus::rebuild_index() {
    sentence_lookup_.clear();
    for (std::size_t d = 0; d < documents.size(); ++d) {
        for (std::size_t s = 0; s < documents[d].sentences.size(); ++s) {
            sentence_lookup_.emplace_back(d, s);
        }
    }
}

std::set<std::string> load_stopwords(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw InputError("cannot read stopword file: " + file.string());
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string w;
        while (ss >> w) words.insert(to_lower(w));
    }
    return words;
}

std::string clean_text(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (char c : raw) {
        if (is_blank(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(c);
    }
    return out;
}

std::vector<std::string> segment_sentences(std::string_view text) {
    std::vector<std::string> spans;
    std::size_t begin = 0;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        char c = text[i];
        if (c != '.' && c != '?' && c != '!') {
            ++i;
            continue;
        }
        std::size_t punct_start = i;
        while (i < n && (text[i] == '.' || text[i] == '?' || text[i] == '!')) ++i;
        // Closing quotes and brackets stay with the sentence.
        while (i < n && (text[i] == '"' || text[i] == '\'' || text[i] == ')' || text[i] == ']')) ++i;
        std::size_t after_punct = i;
        std::size_t ws = i;
        while (ws < n && is_blank(text[ws])) ++ws;
        if (ws == after_punct || ws >= n) continue;       // no whitespace or end of text
        if (!is_upper_ascii(text[ws])) continue;          // next sentence must open with a capital
        if (text[punct_start] == '.' &&
            abbreviations().count(word_before(text, punct_start)) > 0) {
            continue;                                      // "Dr. Smith" and friends
        }
        spans.emplace_back(text.substr(begin, after_punct - begin));
        begin = ws;
        i = ws;
    }
    if (begin < n) {
        std::string tail(text.substr(begin));
        while (!tail.empty() && is_blank(tail.back())) tail.pop_back();
        if (!tail.empty()) spans.push_back(std::move(tail));
    }
    return spans;
}

std::string light_stem(std::string term) {
    auto ends_with = [&](std::string_view suffix) {
        return term.size() >= suffix.size() &&
               term.compare(term.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    if (ends_with("ies") && term.size() > 4) {
        term.replace(term.size() - 3, 3, "y");
    } else if (ends_with("s") && !ends_with("ss") && !ends_with("us") && term.size() > 3) {
        term.pop_back();
    }
    if (ends_with("ing") && term.size() > 5) {
        term.erase(term.size() - 3);
        if (double_consonant_tail(term)) term.pop_back();
    } else if (ends_with("ed") && term.size() > 4) {
        term.erase(term.size() - 2);
        if (double_consonant_tail(term)) term.pop_back();
    }
    return term;
}

std::vector<Token> tokenize(std::string_view text, const IngestSettings& settings,
                            const std::set<std::string>& stopwords) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        if (!is_token_char(text[i])) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < n && is_token_char(text[i])) ++i;
        std::string_view run = text.substr(start, i - start);
        while (!run.empty() && run.front() == '\'') run.remove_prefix(1);
        while (!run.empty() && run.back() == '\'') run.remove_suffix(1);
        if (run.empty()) continue;
        Token tok;
        tok.surface = std::string(run);
        std::string lowered = settings.lowercase ? to_lower(run) : tok.surface;
        tok.stopword = stopwords.count(to_lower(run)) > 0;
        tok.term = settings.stem ? light_stem(lowered) : lowered;
        tokens.push_back(std::move(tok));
    }
    return tokens;
}

Corpus ingest_texts(const std::vector<std::pair<std::string, std::string>>& named_texts,
                    const IngestSettings& settings) {
    if (named_texts.empty()) throw InputError("no documents to ingest");
    Corpus corpus;
    corpus.config_snapshot = settings;
    corpus.stopwords = settings.stopwords_file ? load_stopwords(*settings.stopwords_file)
                                               : default_stopwords();

    int next_sentence_id = 0;
    for (const auto& [name, raw] : named_texts) {
        std::string cleaned = clean_text(raw);
        if (cleaned.empty()) {
            corpus.warnings.push_back("empty document skipped: " + name);
            continue;
        }
        Document doc;
        doc.id = static_cast<int>(corpus.documents.size());
        doc.source_name = name;
        for (auto& span : segment_sentences(cleaned)) {
            Sentence sent;
            sent.tokens = tokenize(span, settings, corpus.stopwords);
            if (sent.tokens.empty()) {
                corpus.warnings.push_back("tokenless span skipped in " + name + ": " + span);
                continue;
            }
            sent.id = next_sentence_id++;
            sent.doc_id = doc.id;
            sent.raw_text = std::move(span);
            sent.byte_len = sent.raw_text.size();
            doc.sentences.push_back(std::move(sent));
        }
        if (doc.sentences.empty()) {
            corpus.warnings.push_back("document without sentences skipped: " + name);
            // re-number: nothing was committed under this id
            continue;
        }
        corpus.documents.push_back(std::move(doc));
    }
    if (corpus.documents.empty()) throw InputError("all documents were empty");

    // Renumber sentence ids densely in case a skipped document left a gap.
    next_sentence_id = 0;
    for (auto& doc : corpus.documents) {
        doc.id = static_cast<int>(&doc - corpus.documents.data());
        for (auto& sent : doc.sentences) {
            sent.id = next_sentence_id++;
            sent.doc_id = doc.id;
        }
    }

    // Document frequencies over admitted documents; idf = ln(n/df).
    const double n_docs = static_cast<double>(corpus.documents.size());
    std::map<std::string, int> df;
    for (const auto& doc : corpus.documents) {
        std::set<std::string> seen;
        for (const auto& sent : doc.sentences)
            for (const auto& tok : sent.tokens) seen.insert(tok.term);
        for (const auto& term : seen) df[term] += 1;
    }
    for (const auto& [term, count] : df) {
        corpus.idf_table[term] = std::log(n_docs / static_cast<double>(count));
    }

    corpus.rebuild_index();
    return corpus;
}

Corpus ingest(const std::vector<std::filesystem::path>& paths, const IngestSettings& settings) {
    std::vector<std::pair<std::string, std::string>> texts;
    for (const auto& path : paths) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw InputError("cannot read document: " + path.string());
        std::ostringstream buf;
        buf << in.rdbuf();
        texts.emplace_back(path.filename().string(), buf.str());
    }
    return ingest_texts(texts, settings);
}

Corpus ingest_directory(const std::filesystem::path& dir, const IngestSettings& settings) {
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) {
        throw InputError("input directory not found: " + dir.string());
    }
    std::vector<std::filesystem::path> paths;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file()) paths.push_back(entry.path());
    }
    std::sort(paths.begin(), paths.end());
    if (paths.empty()) throw InputError("input directory has no files: " + dir.string());
    return ingest(paths, settings);
}

TermVector term_vector(const std::vector<Token>& tokens,
                       const std::map<std::string, double>& idf) {
    std::map<std::string, int> tf;
    for (const auto& tok : tokens) {
        if (!tok.stopword) tf[tok.term] += 1;
    }
    TermVector vec;
    for (const auto& [term, count] : tf) {
        auto it = idf.find(term);
        if (it == idf.end()) continue;  // unknown term carries no weight
        double w = static_cast<double>(count) * it->second;
        if (w > 0.0) vec.weights[term] = w;
    }
    return vec;
}

TermVector sentence_vector(const Sentence& s, const Corpus& corpus) {
    return term_vector(s.tokens, corpus.idf_table);
}

TermVector document_vector(const Document& d, const Corpus& corpus) {
    TermVector vec;
    for (const auto& s : d.sentences) vec.add(sentence_vector(s, corpus));
    return vec;
}

} // namespace mlsum
