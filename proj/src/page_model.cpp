#include "rtchan/page_model.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rtchan/errors.hpp"

namespace rtchan {

namespace {

bool is_ascii_alnum(char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool starts_with_ci(std::string_view text, std::size_t pos, std::string_view prefix) {
    if (pos + prefix.size() > text.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(text[pos + i])) != prefix[i]) return false;
    }
    return true;
}

// Position right after the closing '>' of "</name ...>", or npos.
std::size_t find_closing_tag(std::string_view text, std::size_t pos, std::string_view name) {
    while (pos < text.size()) {
        if (text[pos] == '<' && pos + 1 < text.size() && text[pos + 1] == '/' &&
            starts_with_ci(text, pos + 2, name)) {
            std::size_t gt = text.find('>', pos + 2);
            return gt == std::string_view::npos ? std::string_view::npos : gt + 1;
        }
        ++pos;
    }
    return std::string_view::npos;
}

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// Decode the entity starting at text[pos] == '&'. On success appends the
// replacement and returns the position after the entity; otherwise keeps
// the '&' literal and returns pos + 1.
std::size_t decode_entity(std::string_view text, std::size_t pos, std::string& out) {
    std::size_t semi = text.find(';', pos + 1);
    if (semi == std::string_view::npos || semi - pos > 12) {
        out.push_back('&');
        return pos + 1;
    }
    std::string_view body = text.substr(pos + 1, semi - pos - 1);
    if (!body.empty() && body[0] == '#') {
        std::uint64_t cp = 0;
        bool ok = body.size() > 1;
        if (body.size() > 2 && (body[1] == 'x' || body[1] == 'X')) {
            for (std::size_t i = 2; i < body.size() && ok; ++i) {
                char c = body[i];
                int d = (c >= '0' && c <= '9') ? c - '0'
                      : (c >= 'a' && c <= 'f') ? c - 'a' + 10
                      : (c >= 'A' && c <= 'F') ? c - 'A' + 10
                                               : -1;
                if (d < 0) ok = false; else cp = cp * 16 + static_cast<std::uint64_t>(d);
            }
            ok = ok && body.size() > 2;
        } else {
            for (std::size_t i = 1; i < body.size() && ok; ++i) {
                char c = body[i];
                if (c < '0' || c > '9') ok = false;
                else cp = cp * 10 + static_cast<std::uint64_t>(c - '0');
            }
        }
        if (ok && cp > 0 && cp <= 0x10FFFF) {
            append_utf8(out, static_cast<std::uint32_t>(cp));
            return semi + 1;
        }
        out.push_back('&');
        return pos + 1;
    }
    static const struct { std::string_view name; char ch; } named[] = {
        {"amp", '&'}, {"lt", '<'}, {"gt", '>'}, {"quot", '"'}, {"apos", '\''},
    };
    for (const auto& e : named) {
        if (body == e.name) {
            out.push_back(e.ch);
            return semi + 1;
        }
    }
    out.push_back('&');
    return pos + 1;
}

// Markup removed, entities decoded; every dropped construct becomes a
// single space so it still separates words.
std::string strip_markup(std::string_view html) {
    std::string out;
    out.reserve(html.size());
    std::size_t pos = 0;
    while (pos < html.size()) {
        char c = html[pos];
        if (c == '<') {
            if (starts_with_ci(html, pos, "<!--")) {
                std::size_t end = html.find("-->", pos + 4);
                pos = end == std::string_view::npos ? html.size() : end + 3;
            } else if (starts_with_ci(html, pos, "<script") || starts_with_ci(html, pos, "<style")) {
                std::string_view name = starts_with_ci(html, pos, "<script") ? "script" : "style";
                std::size_t body = html.find('>', pos);
                if (body == std::string_view::npos) {
                    pos = html.size();
                } else {
                    std::size_t end = find_closing_tag(html, body + 1, name);
                    pos = end == std::string_view::npos ? html.size() : end;
                }
            } else {
                std::size_t end = html.find('>', pos);
                pos = end == std::string_view::npos ? html.size() : end + 1;
            }
            out.push_back(' ');
        } else if (c == '&') {
            pos = decode_entity(html, pos, out);
        } else {
            out.push_back(c);
            ++pos;
        }
    }
    return out;
}

std::string json_type_error(const std::string& source, std::size_t line, const std::string& what) {
    return source + ":" + std::to_string(line) + ": " + what;
}

}  // namespace

std::size_t count_relevant_words(std::string_view html) {
    const std::string text = strip_markup(html);
    std::size_t count = 0;
    bool in_token = false;
    bool token_counts = false;
    for (char c : text) {
        if (is_space(c)) {
            if (in_token && token_counts) ++count;
            in_token = false;
            token_counts = false;
        } else {
            in_token = true;
            if (is_ascii_alnum(c)) token_counts = true;
        }
    }
    if (in_token && token_counts) ++count;
    return count;
}

Corpus Corpus::load(const std::string& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw ConfigError("cannot open corpus manifest: " + manifest_path);
    const std::filesystem::path base = std::filesystem::path(manifest_path).parent_path();

    Corpus corpus;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json entry;
        try {
            entry = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(json_type_error(manifest_path, line_no, e.what()));
        }
        if (!entry.is_object() || !entry.contains("url") || !entry["url"].is_string()) {
            throw ConfigError(json_type_error(manifest_path, line_no, "entry needs a string \"url\""));
        }
        PageRecord rec;
        rec.url = entry["url"].get<std::string>();
        rec.status = entry.value("status", 200);
        if (entry.contains("word_count")) {
            rec.word_count = entry["word_count"].get<std::size_t>();
        } else if (entry.contains("file")) {
            const auto path = base / entry["file"].get<std::string>();
            std::ifstream page(path, std::ios::binary);
            if (!page) {
                throw ConfigError(json_type_error(manifest_path, line_no,
                                                  "cannot read page file: " + path.string()));
            }
            std::ostringstream body;
            body << page.rdbuf();
            rec.word_count = count_relevant_words(body.str());
            rec.body_available = true;
        } else {
            throw ConfigError(json_type_error(manifest_path, line_no,
                                              "entry needs \"word_count\" or \"file\""));
        }
        if (corpus.entries_.contains(rec.url)) {
            throw ConfigError(json_type_error(manifest_path, line_no, "duplicate url: " + rec.url));
        }
        corpus.add(std::move(rec));
    }
    return corpus;
}

void Corpus::add(PageRecord record) {
    if (record.status < 200 || record.status > 299) record.word_count = 0;
    entries_[record.url] = std::move(record);
}

PageRecord Corpus::fetch(const std::string& url) {
    auto it = entries_.find(url);
    if (it == entries_.end()) {
        PageRecord missing;
        missing.url = url;
        missing.status = 404;
        return missing;
    }
    return it->second;
}

std::vector<std::string> load_url_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open URL list: " + path);
    std::vector<std::string> urls;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto last = line.find_last_not_of(" \t");
        urls.push_back(line.substr(first, last - first + 1));
    }
    return urls;
}

}  // namespace rtchan
