#include "mlsum/frames.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "mlsum/errors.hpp"

namespace mlsum {

namespace {

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool is_capitalized(const std::string& surface) {
    return !surface.empty() && surface.front() >= 'A' && surface.front() <= 'Z';
}

const std::set<std::string>& temporal_cues() {
    static const std::set<std::string> cues = {
        "monday",   "tuesday", "wednesday", "thursday", "friday",  "saturday",
        "sunday",   "january", "february",  "march",    "april",   "may",
        "june",     "july",    "august",    "september", "october", "november",
        "december", "yesterday", "today",   "tomorrow", "tonight",
    };
    return cues;
}

// Prepositions and conjunctions that terminate a noun chunk.
const std::set<std::string>& chunk_stoppers() {
    static const std::set<std::string> stoppers = {
        "in",    "at",    "on",    "by",    "for",   "with",  "from",  "to",    "of",
        "after", "before", "during", "over", "under", "into", "onto", "near",
        "against", "between", "through",
        "and",   "or",    "but",   "because", "although", "while", "that",
        "which", "who",   "whom",  "whose", "where", "when", "as", "if",
    };
    return stoppers;
}

constexpr std::size_t kMaxChunkTokens = 6;

std::string join_surfaces(const std::vector<Token>& tokens, std::size_t begin, std::size_t end) {
    std::string out;
    for (std::size_t i = begin; i < end; ++i) {
        if (!out.empty()) out.push_back(' ');
        out += tokens[i].surface;
    }
    return out;
}

} // namespace

std::string_view role_label(Role role) {
    switch (role) {
        case Role::A0: return "A0";
        case Role::A1: return "A1";
        case Role::A2: return "A2";
        case Role::AmTmp: return "AM-TMP";
        case Role::AmLoc: return "AM-LOC";
    }
    return "?";
}

std::optional<Role> parse_role(std::string_view label) {
    if (label == "A0") return Role::A0;
    if (label == "A1") return Role::A1;
    if (label == "A2") return Role::A2;
    if (label == "AM-TMP") return Role::AmTmp;
    if (label == "AM-LOC") return Role::AmLoc;
    return std::nullopt;
}

bool classify_completeness(const Frame& frame) {
    if (frame.predicate.empty()) return false;
    if (!frame.has(Role::A0) && !frame.has(Role::A1)) return false;
    return frame.args.size() >= 2;
}

FrameLoadResult load_frames(const std::filesystem::path& annotation_file, const Corpus& corpus) {
    std::ifstream in(annotation_file);
    if (!in) throw InputError("cannot read annotation file: " + annotation_file.string());

    FrameLoadResult result;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            std::size_t tab = line.find('\t', start);
            fields.push_back(line.substr(start, tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        const std::string record = "record " + std::to_string(line_no);
        if (fields.size() < 3) {
            result.warnings.push_back(record + ": expected doc, sentence and predicate fields");
            continue;
        }

        std::size_t doc_idx = 0, sent_idx = 0;
        try {
            doc_idx = static_cast<std::size_t>(std::stoul(fields[0]));
            sent_idx = static_cast<std::size_t>(std::stoul(fields[1]));
        } catch (const std::exception&) {
            result.warnings.push_back(record + ": non-numeric document or sentence index");
            continue;
        }
        if (doc_idx >= corpus.documents.size() ||
            sent_idx >= corpus.documents[doc_idx].sentences.size()) {
            throw InputError(record + ": sentence reference " + fields[0] + ":" + fields[1] +
                             " does not resolve into the corpus");
        }
        if (fields[2].empty()) {
            result.warnings.push_back(record + ": empty predicate");
            continue;
        }

        Frame frame;
        frame.sentence_id = corpus.documents[doc_idx].sentences[sent_idx].id;
        frame.predicate = fields[2];
        bool rejected = false;
        for (std::size_t f = 3; f < fields.size(); ++f) {
            if (fields[f].empty()) continue;
            std::size_t eq = fields[f].find('=');
            if (eq == std::string::npos) {
                result.warnings.push_back(record + ": malformed argument '" + fields[f] + "'");
                rejected = true;
                break;
            }
            auto role = parse_role(fields[f].substr(0, eq));
            if (!role) {
                result.warnings.push_back(record + ": unknown role label '" +
                                          fields[f].substr(0, eq) + "'");
                rejected = true;
                break;
            }
            if (frame.args.count(*role) > 0) {
                result.warnings.push_back(record + ": duplicate role " +
                                          std::string(role_label(*role)));
                rejected = true;
                break;
            }
            frame.args[*role] = fields[f].substr(eq + 1);
        }
        if (rejected) continue;

        frame.id = static_cast<int>(result.frames.size());
        frame.complete = classify_completeness(frame);
        result.frames.push_back(std::move(frame));
    }
    return result;
}

std::vector<Frame> extract_frames_heuristic(const Sentence& sentence, const VerbLexicon& lexicon) {
    const auto& tokens = sentence.tokens;
    std::vector<std::size_t> predicates;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (lexicon.is_verb(to_lower(tokens[i].surface))) predicates.push_back(i);
    }
    if (predicates.empty()) return {};

    auto is_boundary = [&](std::size_t i) {
        std::string lowered = to_lower(tokens[i].surface);
        return lexicon.is_verb(lowered) || chunk_stoppers().count(lowered) > 0;
    };

    // Sentence-level cues shared by every frame of the sentence.
    std::string am_tmp;
    for (const auto& tok : tokens) {
        if (temporal_cues().count(to_lower(tok.surface)) > 0) {
            am_tmp = tok.surface;
            break;
        }
    }
    std::string am_loc;
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
        std::string lowered = to_lower(tokens[i].surface);
        if ((lowered == "in" || lowered == "at") && is_capitalized(tokens[i + 1].surface)) {
            std::size_t end = i + 1;
            while (end < tokens.size() && is_capitalized(tokens[end].surface)) ++end;
            am_loc = join_surfaces(tokens, i + 1, end);
            break;
        }
    }

    std::vector<Frame> frames;
    for (std::size_t p : predicates) {
        Frame frame;
        frame.sentence_id = sentence.id;
        frame.predicate = tokens[p].surface;

        // A0: noun chunk immediately left of the predicate.
        std::size_t left_end = p;
        std::size_t left_begin = p;
        while (left_begin > 0 && left_end - left_begin < kMaxChunkTokens &&
               !is_boundary(left_begin - 1)) {
            --left_begin;
        }
        if (left_begin < left_end) frame.args[Role::A0] = join_surfaces(tokens, left_begin, left_end);

        // A1: noun chunk immediately right of the predicate.
        std::size_t right_begin = p + 1;
        std::size_t right_end = right_begin;
        while (right_end < tokens.size() && right_end - right_begin < kMaxChunkTokens &&
               !is_boundary(right_end)) {
            ++right_end;
        }
        if (right_begin < right_end)
            frame.args[Role::A1] = join_surfaces(tokens, right_begin, right_end);

        if (!am_tmp.empty()) frame.args[Role::AmTmp] = am_tmp;
        if (!am_loc.empty()) frame.args[Role::AmLoc] = am_loc;

        frame.complete = classify_completeness(frame);
        frames.push_back(std::move(frame));
    }
    return frames;
}

std::vector<Frame> extract_frames(const Corpus& corpus, const VerbLexicon& lexicon) {
    std::vector<Frame> frames;
    for (const auto& doc : corpus.documents) {
        for (const auto& sent : doc.sentences) {
            for (auto& frame : extract_frames_heuristic(sent, lexicon)) {
                frame.id = static_cast<int>(frames.size());
                frames.push_back(std::move(frame));
            }
        }
    }
    return frames;
}

std::vector<Frame> cover_sentences(const Corpus& corpus, std::vector<Frame> frames,
                                   const VerbLexicon& lexicon) {
    std::set<int> covered;
    for (const auto& frame : frames) covered.insert(frame.sentence_id);

    for (const auto& doc : corpus.documents) {
        for (const auto& sent : doc.sentences) {
            if (covered.count(sent.id) > 0) continue;
            Frame frame;
            frame.id = static_cast<int>(frames.size());
            frame.sentence_id = sent.id;
            frame.synthetic = true;
            frame.complete = false;
            frame.predicate = sent.tokens.front().surface;
            for (const auto& tok : sent.tokens) {
                if (lexicon.is_verb(to_lower(tok.surface))) {
                    frame.predicate = tok.surface;
                    break;
                }
            }
            frame.args[Role::A0] = sent.raw_text;
            frames.push_back(std::move(frame));
        }
    }
    return frames;
}

} // namespace mlsum
