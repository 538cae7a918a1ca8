#ifndef MLSUM_TEXT_MODEL_HPP
#define MLSUM_TEXT_MODEL_HPP

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mlsum/term_vector.hpp"

namespace mlsum {

struct Token {
    std::string surface;  // as it appears in the sentence
    std::string term;     // lowercased (and stemmed when enabled), never empty
    bool stopword = false;
};

struct Sentence {
    int id = -1;      // global index across the corpus
    int doc_id = -1;  // owning document
    std::string raw_text;
    std::size_t byte_len = 0;  // encoded length of raw_text in bytes
    std::vector<Token> tokens;
};

struct Document {
    int id = -1;
    std::string source_name;
    std::vector<Sentence> sentences;
};

struct IngestSettings {
    bool lowercase = true;
    bool stem = false;  // light suffix stemmer, off by default
    std::optional<std::filesystem::path> stopwords_file;  // empty -> bundled list

    bool operator==(const IngestSettings&) const = default;
};

struct Corpus {
    std::vector<Document> documents;
    std::map<std::string, double> idf_table;  // covers every term in any sentence
    IngestSettings config_snapshot;
    std::set<std::string> stopwords;  // resolved set used at ingestion
    std::vector<std::string> warnings;

    std::size_t document_count() const { return documents.size(); }
    std::size_t sentence_count() const { return sentence_lookup_.size(); }

    const Sentence& sentence(int global_id) const {
        auto [doc, local] = sentence_lookup_.at(static_cast<std::size_t>(global_id));
        return documents[doc].sentences[local];
    }

    double idf(const std::string& term) const {
        auto it = idf_table.find(term);
        return it == idf_table.end() ? 0.0 : it->second;
    }

    /// Rebuild the global-id lookup; ingest calls this once, and anyone who
    /// constructs a Corpus by hand (tests do) must call it too.
    void rebuild_index();

private:
    std::vector<std::pair<std::size_t, std::size_t>> sentence_lookup_;
};

/// The bundled English stopword list.
const std::set<std::string>& default_stopwords();

/// Load one term per line; '#' starts a comment.
std::set<std::string> load_stopwords(const std::filesystem::path& file);

/// Whitespace canonicalization applied to every document before
/// segmentation: line endings become '\n', runs of blanks collapse to one
/// space, paragraph text is joined. Byte budgets are measured on this
/// cleaned form.
std::string clean_text(std::string_view raw);

/// Split cleaned text into sentence spans. Splits after '.', '?' or '!'
/// followed by whitespace and a capital letter, unless the preceding word is
/// a known abbreviation. The spans cover all non-whitespace content in
/// order; text with no boundary comes back as a single span.
std::vector<std::string> segment_sentences(std::string_view text);

/// Tokenize a span: alphanumeric runs (plus inner apostrophes), normalized
/// per settings and flagged against the stopword set.
std::vector<Token> tokenize(std::string_view text, const IngestSettings& settings,
                            const std::set<std::string>& stopwords);

/// Light suffix stemmer used when IngestSettings::stem is on.
std::string light_stem(std::string term);

/// Build a corpus from (name, text) pairs. Empty documents are skipped with
/// a warning; document ids stay dense. idf(t) = ln(n_docs / df(t)).
Corpus ingest_texts(const std::vector<std::pair<std::string, std::string>>& named_texts,
                    const IngestSettings& settings);

/// Read one document per file. Unreadable path -> InputError naming it.
Corpus ingest(const std::vector<std::filesystem::path>& paths, const IngestSettings& settings);

/// All regular files in a directory, sorted by filename.
Corpus ingest_directory(const std::filesystem::path& dir, const IngestSettings& settings);

/// weight(t) = tf(t) * idf(t) over non-stopword tokens.
TermVector term_vector(const std::vector<Token>& tokens,
                       const std::map<std::string, double>& idf);

/// tf*idf vector of one sentence.
TermVector sentence_vector(const Sentence& s, const Corpus& corpus);

/// Sum of the document's sentence vectors.
TermVector document_vector(const Document& d, const Corpus& corpus);

} // namespace mlsum

#endif
