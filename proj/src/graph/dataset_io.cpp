#include "rfgnn/graph/dataset_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <json.hpp>

#include "rfgnn/core/error.hpp"

namespace rfgnn {

namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path, const std::string& label) {
    std::ifstream in(path, std::ios::binary);
    RFG_CHECK(in.good(), LoadError, label, ": cannot open ", path.string());
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return text;
}

std::vector<std::string_view> split_lines(const std::string& text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string_view line(text.data() + start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (end == text.size()) break;
        start = end + 1;
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

double parse_double(std::string_view s, const std::string& file, std::size_t lineno) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    RFG_CHECK(ec == std::errc() && ptr == s.data() + s.size(), LoadError,
              file, ":", lineno, ": bad number '", std::string(s), "'");
    return value;
}

std::int64_t parse_int(std::string_view s, const std::string& file, std::size_t lineno) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    RFG_CHECK(ec == std::errc() && ptr == s.data() + s.size(), LoadError,
              file, ":", lineno, ": bad integer '", std::string(s), "'");
    return value;
}

json parse_json_file(const std::filesystem::path& path, const std::string& label) {
    const auto text = read_file(path, label);
    json parsed = json::parse(text, nullptr, false);
    RFG_CHECK(!parsed.is_discarded(), LoadError, label, ": invalid JSON");
    return parsed;
}

DatasetManifest read_manifest(const std::filesystem::path& dir) {
    const json j = parse_json_file(dir / "manifest.json", "manifest.json");
    DatasetManifest m;
    try {
        m.num_nodes = j.at("num_nodes").get<std::int32_t>();
        m.num_features = j.at("num_features").get<std::int32_t>();
        m.num_relations = j.at("num_relations").get<std::int32_t>();
        m.num_classes = j.at("num_classes").get<std::int32_t>();
        if (j.contains("class_names")) {
            m.class_names = j.at("class_names").get<std::vector<std::string>>();
        }
        const auto& files = j.at("files");
        m.features_file = files.at("features").get<std::string>();
        m.edges_file = files.at("edges").get<std::string>();
        m.labels_file = files.at("labels").get<std::string>();
        m.splits_file = files.at("splits").get<std::string>();
    } catch (const json::exception& e) {
        throw LoadError(concat("manifest.json: ", e.what()));
    }
    RFG_CHECK(m.num_nodes > 0 && m.num_features > 0 && m.num_relations > 0 &&
                  m.num_classes > 0,
              LoadError, "manifest.json: counts must be positive");
    RFG_CHECK(m.class_names.empty() ||
                  m.class_names.size() == static_cast<std::size_t>(m.num_classes),
              LoadError, "manifest.json: class_names length ", m.class_names.size(),
              " != num_classes ", m.num_classes);
    return m;
}

std::vector<std::int32_t> read_mask(const json& splits, const char* key,
                                    std::int32_t n, const std::string& file) {
    RFG_CHECK(splits.contains(key), LoadError, file, ": missing '", key, "' array");
    std::vector<std::int32_t> mask;
    for (const auto& v : splits.at(key)) {
        RFG_CHECK(v.is_number_integer(), LoadError, file, ": non-integer node in '",
                  key, "'");
        const auto node = v.get<std::int64_t>();
        RFG_CHECK(node >= 0 && node < n, LoadError, file, ": ", key, " node ", node,
                  " out of range [0,", n, ")");
        mask.push_back(static_cast<std::int32_t>(node));
    }
    std::sort(mask.begin(), mask.end());
    mask.erase(std::unique(mask.begin(), mask.end()), mask.end());
    return mask;
}

} // namespace

MultiRelationGraph load_dataset(const std::filesystem::path& dir) {
    RFG_CHECK(std::filesystem::is_directory(dir), LoadError,
              "dataset directory not found: ", dir.string());
    const DatasetManifest m = read_manifest(dir);

    MultiRelationGraph g;
    g.num_nodes = m.num_nodes;
    g.num_features = m.num_features;
    g.num_relations = m.num_relations;
    g.num_classes = m.num_classes;
    g.class_names = m.class_names;

    {
        const auto& file = m.features_file;
        const auto text = read_file(dir / file, file);
        const auto lines = split_lines(text);
        RFG_CHECK(lines.size() == static_cast<std::size_t>(m.num_nodes), LoadError,
                  file, ": has ", lines.size(), " rows, manifest says num_nodes=",
                  m.num_nodes);
        g.features = DenseMatrix(static_cast<std::size_t>(m.num_nodes),
                                 static_cast<std::size_t>(m.num_features));
        for (std::size_t i = 0; i < lines.size(); ++i) {
            const auto fields = split_fields(lines[i]);
            RFG_CHECK(fields.size() == static_cast<std::size_t>(m.num_features),
                      LoadError, file, ":", i + 1, ": has ", fields.size(),
                      " values, expected ", m.num_features);
            for (std::size_t j = 0; j < fields.size(); ++j) {
                g.features(i, j) = parse_double(fields[j], file, i + 1);
            }
        }
    }

    {
        const auto& file = m.edges_file;
        const auto text = read_file(dir / file, file);
        const auto lines = split_lines(text);
        RFG_CHECK(!lines.empty() && lines[0] == "src,dst,rel", LoadError, file,
                  ":1: expected header 'src,dst,rel'");
        g.edges.resize(static_cast<std::size_t>(m.num_relations));
        for (std::size_t i = 1; i < lines.size(); ++i) {
            const auto fields = split_fields(lines[i]);
            RFG_CHECK(fields.size() == 3, LoadError, file, ":", i + 1,
                      ": expected 3 fields, got ", fields.size());
            const auto src = parse_int(fields[0], file, i + 1);
            const auto dst = parse_int(fields[1], file, i + 1);
            const auto rel = parse_int(fields[2], file, i + 1);
            RFG_CHECK(src >= 0 && src < m.num_nodes, LoadError, file, ":", i + 1,
                      ": endpoint ", src, " out of range [0,", m.num_nodes, ")");
            RFG_CHECK(dst >= 0 && dst < m.num_nodes, LoadError, file, ":", i + 1,
                      ": endpoint ", dst, " out of range [0,", m.num_nodes, ")");
            RFG_CHECK(rel >= 0 && rel < m.num_relations, LoadError, file, ":", i + 1,
                      ": relation ", rel, " out of range [0,", m.num_relations, ")");
            g.edges[static_cast<std::size_t>(rel)].push_back(
                {static_cast<std::int32_t>(src), static_cast<std::int32_t>(dst)});
        }
        for (auto& rel : g.edges) {
            std::sort(rel.begin(), rel.end());
            rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
        }
    }

    {
        const auto& file = m.labels_file;
        const auto text = read_file(dir / file, file);
        const auto lines = split_lines(text);
        RFG_CHECK(!lines.empty() && lines[0] == "node,label", LoadError, file,
                  ":1: expected header 'node,label'");
        RFG_CHECK(lines.size() - 1 == static_cast<std::size_t>(m.num_nodes), LoadError,
                  file, ": has ", lines.size() - 1, " rows, manifest says num_nodes=",
                  m.num_nodes);
        g.labels.assign(static_cast<std::size_t>(m.num_nodes), -2);
        for (std::size_t i = 1; i < lines.size(); ++i) {
            const auto fields = split_fields(lines[i]);
            RFG_CHECK(fields.size() == 2, LoadError, file, ":", i + 1,
                      ": expected 2 fields, got ", fields.size());
            const auto node = parse_int(fields[0], file, i + 1);
            const auto label = parse_int(fields[1], file, i + 1);
            RFG_CHECK(node >= 0 && node < m.num_nodes, LoadError, file, ":", i + 1,
                      ": node ", node, " out of range [0,", m.num_nodes, ")");
            RFG_CHECK(g.labels[static_cast<std::size_t>(node)] == -2, LoadError, file,
                      ":", i + 1, ": node ", node, " labeled twice");
            RFG_CHECK(label >= -1 && label < m.num_classes, LoadError, file, ":", i + 1,
                      ": label ", label, " out of range [-1,", m.num_classes, ")");
            g.labels[static_cast<std::size_t>(node)] = static_cast<std::int32_t>(label);
        }
    }

    {
        const auto& file = m.splits_file;
        const json splits = parse_json_file(dir / file, file);
        g.train_mask = read_mask(splits, "train", m.num_nodes, file);
        g.val_mask = read_mask(splits, "val", m.num_nodes, file);
        g.test_mask = read_mask(splits, "test", m.num_nodes, file);
    }

    try {
        g.validate();
    } catch (const Error& e) {
        throw LoadError(concat(dir.string(), ": ", e.what()));
    }
    return g;
}

void save_dataset(const std::filesystem::path& dir, const MultiRelationGraph& g) {
    g.validate();
    std::filesystem::create_directories(dir);

    {
        json files = {{"features", "features.csv"},
                      {"edges", "edges.csv"},
                      {"labels", "labels.csv"},
                      {"splits", "splits.json"}};
        json j = {{"num_nodes", g.num_nodes},
                  {"num_features", g.num_features},
                  {"num_relations", g.num_relations},
                  {"num_classes", g.num_classes},
                  {"files", files}};
        if (!g.class_names.empty()) j["class_names"] = g.class_names;
        std::ofstream out(dir / "manifest.json", std::ios::binary);
        out << j.dump(2) << '\n';
    }

    {
        std::ofstream out(dir / "features.csv", std::ios::binary);
        char buf[64];
        for (std::int32_t i = 0; i < g.num_nodes; ++i) {
            const double* row = g.features.row(static_cast<std::size_t>(i));
            for (std::int32_t j = 0; j < g.num_features; ++j) {
                // Shortest round-trip decimal form.
                const auto res = std::to_chars(buf, buf + sizeof(buf), row[j]);
                if (j > 0) out << ',';
                out.write(buf, res.ptr - buf);
            }
            out << '\n';
        }
    }

    {
        std::ofstream out(dir / "edges.csv", std::ios::binary);
        out << "src,dst,rel\n";
        for (std::int32_t k = 0; k < g.num_relations; ++k) {
            for (const auto& e : g.edges[static_cast<std::size_t>(k)]) {
                out << e.src << ',' << e.dst << ',' << k << '\n';
            }
        }
    }

    {
        std::ofstream out(dir / "labels.csv", std::ios::binary);
        out << "node,label\n";
        for (std::int32_t i = 0; i < g.num_nodes; ++i) {
            out << i << ',' << g.labels[static_cast<std::size_t>(i)] << '\n';
        }
    }

    {
        json splits = {{"train", g.train_mask},
                       {"val", g.val_mask},
                       {"test", g.test_mask}};
        std::ofstream out(dir / "splits.json", std::ios::binary);
        out << splits.dump(2) << '\n';
    }
}

} // namespace rfgnn
