#include "cooc/textprep.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <unordered_map>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/uscript.h>
#include <unicode/utf8.h>

#include "cooc/errors.hpp"

namespace cooc {

namespace {

const icu::Normalizer2& nfkc() {
    UErrorCode ec = U_ZERO_ERROR;
    const icu::Normalizer2* n = icu::Normalizer2::getNFKCInstance(ec);
    if (U_FAILURE(ec) || n == nullptr)
        throw std::runtime_error("ICU NFKC normalizer unavailable");
    return *n;
}

std::vector<UChar32> decode_utf8(std::string_view s) {
    std::vector<UChar32> cps;
    cps.reserve(s.size());
    const auto* bytes = reinterpret_cast<const std::uint8_t*>(s.data());
    std::int32_t i = 0, len = static_cast<std::int32_t>(s.size());
    while (i < len) {
        UChar32 c;
        U8_NEXT(bytes, i, len, c);
        cps.push_back(c < 0 ? 0xFFFD : c);
    }
    return cps;
}

void append_utf8(std::string& out, UChar32 c) {
    std::uint8_t buf[U8_MAX_LENGTH];
    std::int32_t n = 0;
    UBool err = false;
    U8_APPEND(buf, n, U8_MAX_LENGTH, c, err);
    if (!err) out.append(reinterpret_cast<char*>(buf), n);
}

bool is_space_cp(UChar32 c) { return u_isUWhiteSpace(c); }
bool is_punct_cp(UChar32 c) { return u_ispunct(c); }

// Scripts written without word separators get per-character tokens.
bool is_cjk_cp(UChar32 c) {
    UErrorCode ec = U_ZERO_ERROR;
    UScriptCode sc = uscript_getScript(c, &ec);
    if (U_FAILURE(ec)) return false;
    return sc == USCRIPT_HAN || sc == USCRIPT_HIRAGANA || sc == USCRIPT_KATAKANA;
}

std::string encode_utf8(const std::vector<UChar32>& cps, std::size_t begin,
                        std::size_t end) {
    std::string out;
    for (std::size_t i = begin; i < end; ++i) append_utf8(out, cps[i]);
    return out;
}

} // namespace

std::string normalize(std::string_view text, const PrepConfig& config) {
    icu::UnicodeString u =
        icu::UnicodeString::fromUTF8(icu::StringPiece(text.data(), text.size()));
    UErrorCode ec = U_ZERO_ERROR;
    icu::UnicodeString norm = nfkc().normalize(u, ec);
    if (U_FAILURE(ec)) throw std::runtime_error("NFKC normalization failed");

    std::string utf8;
    norm.toUTF8String(utf8);
    std::vector<UChar32> cps = decode_utf8(utf8);

    std::string out;
    out.reserve(utf8.size());
    bool pending_space = false;
    for (UChar32 c : cps) {
        if (is_space_cp(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        append_utf8(out, config.lowercase ? u_tolower(c) : c);
    }
    return out;
}

PrepConfig make_prep_config(const std::vector<std::string>& stopwords,
                            const std::vector<std::string>& keywords,
                            bool lowercase, std::int64_t min_term_frequency,
                            std::int64_t min_term_length) {
    if (min_term_frequency < 1)
        throw InputError("min_term_frequency must be >= 1");
    if (min_term_length < 1)
        throw InputError("min_term_length must be >= 1");

    PrepConfig cfg;
    cfg.lowercase = lowercase;
    cfg.min_term_frequency = min_term_frequency;
    cfg.min_term_length = min_term_length;
    for (const auto& s : stopwords) {
        std::string n = normalize(s, cfg);
        if (!n.empty()) cfg.stopwords.insert(std::move(n));
    }
    std::set<std::string> seen;
    for (const auto& k : keywords) {
        std::string n = normalize(k, cfg);
        if (!n.empty() && seen.insert(n).second) cfg.keywords.push_back(std::move(n));
    }
    return cfg;
}

std::vector<std::string> tokenize(std::string_view text, const PrepConfig& config) {
    const std::string norm = normalize(text, config);
    const std::vector<UChar32> cps = decode_utf8(norm);
    const std::size_t n = cps.size();

    // Longest phrase first; ties cannot occur since keywords are unique.
    std::vector<std::pair<std::vector<UChar32>, const std::string*>> dict;
    dict.reserve(config.keywords.size());
    for (const auto& k : config.keywords) dict.emplace_back(decode_utf8(k), &k);
    std::stable_sort(dict.begin(), dict.end(),
                     [](const auto& a, const auto& b) {
                         return a.first.size() > b.first.size();
                     });

    auto separator = [&](std::size_t i) {
        return is_space_cp(cps[i]) || is_punct_cp(cps[i]);
    };
    auto boundary = [&](std::size_t end) {
        return end == n || separator(end) || is_cjk_cp(cps[end]);
    };

    std::vector<std::string> tokens;
    std::size_t pos = 0;
    while (pos < n) {
        if (separator(pos)) {
            ++pos;
            continue;
        }
        const std::string* matched = nullptr;
        std::size_t matched_len = 0;
        for (const auto& [kcps, kstr] : dict) {
            if (kcps.empty() || pos + kcps.size() > n) continue;
            if (std::equal(kcps.begin(), kcps.end(), cps.begin() + pos) &&
                boundary(pos + kcps.size())) {
                matched = kstr;
                matched_len = kcps.size();
                break;
            }
        }
        if (matched) {
            tokens.push_back(*matched);
            pos += matched_len;
        } else if (is_cjk_cp(cps[pos])) {
            tokens.push_back(encode_utf8(cps, pos, pos + 1));
            ++pos;
        } else {
            std::size_t start = pos;
            while (pos < n && !separator(pos) && !is_cjk_cp(cps[pos])) ++pos;
            tokens.push_back(encode_utf8(cps, start, pos));
        }
    }

    std::erase_if(tokens, [&](const std::string& t) {
        if (config.stopwords.count(t)) return true;
        return static_cast<std::int64_t>(decode_utf8(t).size()) <
               config.min_term_length;
    });
    return tokens;
}

std::vector<TokenSeq> prep_corpus(const Corpus& corpus, const PrepConfig& config) {
    std::vector<TokenSeq> seqs;
    seqs.reserve(corpus.documents.size());
    for (const auto& d : corpus.documents)
        seqs.push_back({d.doc_id, tokenize(d.text, config)});

    if (config.min_term_frequency > 1) {
        std::unordered_map<std::string, std::int64_t> freq;
        for (const auto& s : seqs)
            for (const auto& t : s.tokens) ++freq[t];
        for (auto& s : seqs)
            std::erase_if(s.tokens, [&](const std::string& t) {
                return freq[t] < config.min_term_frequency;
            });
    }
    return seqs;
}

std::vector<std::string> load_word_list(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open word list: " + path.string());
    std::vector<std::string> entries;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t");
        std::string entry = line.substr(first, last - first + 1);
        if (entry.empty() || entry[0] == '#') continue;
        entries.push_back(std::move(entry));
    }
    if (in.bad()) throw InputError("error reading word list: " + path.string());
    return entries;
}

std::vector<std::string> default_stopwords() {
    return {
        "a",   "an",  "and", "are", "as",   "at",   "be",   "but", "by",
        "for", "if",  "in",  "is",  "it",   "its",  "of",   "on",  "or",
        "so",  "the", "to",  "was", "were", "will", "with",
    };
}

} // namespace cooc
