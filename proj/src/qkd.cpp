#include "qmb/qkd.hpp"

#include "qmb/adversary.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace qmb {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string shipment_payload_json(const ProtocolParams& params, const std::string& digest) {
    ordered_json j;
    j["blocks"] = params.T;
    j["qubits_per_block"] = params.R;
    j["total_qubits"] = params.T * params.R;
    j["digest"] = digest;
    return j.dump();
}

std::string message_payload_json(const PublicMessage& msg) {
    ordered_json j;
    j["block_ids"] = msg.block_ids;
    j["control_bits"] = msg.control_bits;
    return j.dump();
}

}  // namespace

void ProtocolParams::validate() const {
    if (K < 1) throw std::invalid_argument("ProtocolParams: K must be at least 1");
    if (T < K) throw std::invalid_argument("ProtocolParams: requires T >= K");
    if (R < 3 || R % 2 == 0) {
        throw std::invalid_argument("ProtocolParams: R must be odd and at least 3");
    }
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("ProtocolParams: epsilon must lie in (0, 1)");
    }
}

Preparation alice_prepare(const ProtocolParams& params, RngStream& rng) {
    params.validate();
    const EncoderParams enc = EncoderParams::two_drawer_default();
    Preparation prep;
    prep.record.pairs.reserve(params.T);
    prep.shipment.blocks.reserve(params.T);
    for (int i = 0; i < params.T; ++i) {
        const TwoDrawerBits pair{rng.bit(), rng.bit()};
        prep.record.pairs.push_back(pair);
        prep.shipment.blocks.emplace_back(params.R, encode2(pair, enc));
    }
    return prep;
}

BobMeasurement bob_measure(const QuantumShipment& shipment, const ProtocolParams& params,
                           RngStream& rng) {
    params.validate();
    if (shipment.block_count() != params.T || shipment.block_size() != params.R) {
        throw std::invalid_argument("bob_measure: shipment does not match params");
    }
    BobMeasurement meas;
    meas.control.reserve(params.T);
    for (int i = 0; i < params.T; ++i) meas.control.push_back(rng.bit());

    meas.outcomes.reserve(params.T);
    meas.majority.reserve(params.T);
    for (int i = 0; i < params.T; ++i) {
        const Basis basis = meas.control[i] == 0 ? Basis::B1 : Basis::B2;
        std::vector<int> row;
        row.reserve(params.R);
        int ones = 0;
        for (const QubitState& qubit : shipment.blocks[i]) {
            const int bit = measure(qubit, basis, rng).bit;
            row.push_back(bit);
            ones += bit;
        }
        meas.outcomes.push_back(std::move(row));
        meas.majority.push_back(2 * ones > params.R ? 1 : 0);
    }
    return meas;
}

KeySelection bob_select_key(const BobMeasurement& meas, const ProtocolParams& params,
                            RngStream& rng) {
    params.validate();
    if (static_cast<int>(meas.majority.size()) != params.T ||
        static_cast<int>(meas.control.size()) != params.T) {
        throw std::invalid_argument("bob_select_key: measurement does not match params");
    }
    // Partial Fisher-Yates, then ascending ids so the key order is canonical.
    std::vector<int> ids(params.T);
    std::iota(ids.begin(), ids.end(), 0);
    for (int i = 0; i < params.K; ++i) {
        const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(params.T - i)));
        std::swap(ids[i], ids[j]);
    }
    ids.resize(params.K);
    std::sort(ids.begin(), ids.end());

    KeySelection sel;
    sel.key.bits.reserve(params.K);
    sel.message.block_ids.reserve(params.K);
    sel.message.control_bits.reserve(params.K);
    for (const int id : ids) {
        sel.key.bits.push_back(meas.majority[id]);
        sel.message.block_ids.push_back(id + 1);
        sel.message.control_bits.push_back(meas.control[id]);
    }
    return sel;
}

KeyMaterial alice_reconstruct(const AliceRecord& record, const PublicMessage& msg) {
    if (msg.block_ids.size() != msg.control_bits.size()) {
        throw std::invalid_argument("alice_reconstruct: ids and control bits differ in length");
    }
    const int T = static_cast<int>(record.pairs.size());
    std::unordered_set<int> seen;
    KeyMaterial key;
    key.bits.reserve(msg.block_ids.size());
    for (std::size_t k = 0; k < msg.block_ids.size(); ++k) {
        const int id = msg.block_ids[k];
        if (id < 1 || id > T) {
            throw std::out_of_range("alice_reconstruct: block id outside [1, T]");
        }
        if (!seen.insert(id).second) {
            throw std::invalid_argument("alice_reconstruct: duplicate block id");
        }
        const int control = msg.control_bits[k];
        if (control != 0 && control != 1) {
            throw std::invalid_argument("alice_reconstruct: control bit must be 0 or 1");
        }
        const TwoDrawerBits& pair = record.pairs[id - 1];
        key.bits.push_back(control == 0 ? pair.alpha : pair.beta);
    }
    return key;
}

std::vector<double> binomial_pmf(int n, double p) {
    if (n < 0) throw std::invalid_argument("binomial_pmf: n must be non-negative");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binomial_pmf: p must lie in [0, 1]");
    std::vector<double> pmf(n + 1);
    double coeff = 1.0;
    for (int k = 0; k <= n; ++k) {
        pmf[k] = coeff * std::pow(p, k) * std::pow(1.0 - p, n - k);
        coeff = coeff * (n - k) / (k + 1);
    }
    return pmf;
}

double majority_error_rate(int R, double p) {
    if (R < 1 || R % 2 == 0) {
        throw std::invalid_argument("majority_error_rate: R must be odd and positive");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("majority_error_rate: p must lie in [0, 1]");
    }
    const std::vector<double> pmf = binomial_pmf(R, p);
    double tail = 0.0;
    for (int k = 0; k <= (R - 1) / 2; ++k) tail += pmf[k];
    return tail;
}

int choose_R(double epsilon, int K, double p) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("choose_R: epsilon must lie in (0, 1)");
    }
    if (K < 1) throw std::invalid_argument("choose_R: K must be at least 1");
    if (!(p > 0.5 && p < 1.0)) throw std::invalid_argument("choose_R: p must lie in (1/2, 1)");
    for (int R = 3; R <= 1001; R += 2) {
        const double all_correct = std::pow(1.0 - majority_error_rate(R, p), K);
        if (all_correct >= 1.0 - epsilon) return R;
    }
    throw std::runtime_error("choose_R: no R <= 1001 meets the budget");
}

Transcript run_protocol(const ProtocolParams& params, const EveStrategy& eve) {
    params.validate();
    Transcript t;
    t.params = params;
    t.eve_mode = eve.mode;

    RngStream alice_rng(params.alice_seed, "alice");
    Preparation prep = alice_prepare(params, alice_rng);
    t.record = std::move(prep.record);
    t.shipment_digest = shipment_digest(prep.shipment);
    t.messages.push_back({1, std::string(kDirectionQuantumAliceToBob), "shipment",
                          shipment_payload_json(params, t.shipment_digest)});

    QuantumShipment delivered = std::move(prep.shipment);
    if (eve.mode != EveMode::none) {
        RngStream eve_rng(eve.eve_seed, "eve");
        delivered = eve_intercept(delivered, eve, eve_rng).shipment;
    }

    RngStream bob_rng(params.bob_seed, "bob");
    t.measurement = bob_measure(delivered, params, bob_rng);
    t.detection = detect(t.measurement, params.R);

    if (t.detection.eavesdropped) {
        t.aborted = true;
        return t;
    }

    KeySelection sel = bob_select_key(t.measurement, params, bob_rng);
    t.bob_key = std::move(sel.key);
    t.message = std::move(sel.message);
    t.messages.push_back({2, std::string(kDirectionClassicalBobToAlice), "key-blocks",
                          message_payload_json(*t.message)});
    t.alice_key = alice_reconstruct(t.record, *t.message);
    return t;
}

std::string serialize_shipment(const QuantumShipment& shipment) {
    std::string out;
    out.reserve(static_cast<std::size_t>(shipment.block_count()) *
                static_cast<std::size_t>(std::max(shipment.block_size(), 1)) * 96);
    char line[160];
    for (int i = 0; i < shipment.block_count(); ++i) {
        const auto& block = shipment.blocks[i];
        for (int j = 0; j < static_cast<int>(block.size()); ++j) {
            const QubitState& s = block[j];
            std::snprintf(line, sizeof line, "%d %d %.17g %.17g %.17g %.17g\n", i + 1, j + 1,
                          s.amp0.real(), s.amp0.imag(), s.amp1.real(), s.amp1.imag());
            out += line;
        }
    }
    return out;
}

QuantumShipment parse_shipment(const std::string& text) {
    QuantumShipment shipment;
    std::istringstream in(text);
    std::string line;
    int expected_block = 1;
    int expected_index = 1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        int block = 0;
        int index = 0;
        double re0 = 0.0, im0 = 0.0, re1 = 0.0, im1 = 0.0;
        if (!(fields >> block >> index >> re0 >> im0 >> re1 >> im1)) {
            throw std::invalid_argument("parse_shipment: malformed record: " + line);
        }
        if (index == 1 && block == expected_block + 1) {
            ++expected_block;
            expected_index = 1;
        }
        if (block != expected_block || index != expected_index) {
            throw std::invalid_argument("parse_shipment: records out of canonical order");
        }
        if (index == 1) shipment.blocks.emplace_back();
        shipment.blocks.back().push_back({Amplitude(re0, im0), Amplitude(re1, im1)});
        ++expected_index;
    }
    if (shipment.blocks.empty()) {
        throw std::invalid_argument("parse_shipment: no records");
    }
    const std::size_t width = shipment.blocks.front().size();
    for (const auto& block : shipment.blocks) {
        if (block.size() != width) {
            throw std::invalid_argument("parse_shipment: ragged blocks");
        }
    }
    return shipment;
}

std::string shipment_digest(const QuantumShipment& shipment) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (int i = 0; i < shipment.block_count(); ++i) {
        const auto& block = shipment.blocks[i];
        for (int j = 0; j < static_cast<int>(block.size()); ++j) {
            const std::uint32_t ids[2] = {static_cast<std::uint32_t>(i + 1),
                                          static_cast<std::uint32_t>(j + 1)};
            h = detail::fnv1a64(ids, sizeof ids, h);
            const double amps[4] = {block[j].amp0.real(), block[j].amp0.imag(),
                                    block[j].amp1.real(), block[j].amp1.imag()};
            h = detail::fnv1a64(amps, sizeof amps, h);
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string serialize_transcript(const Transcript& transcript) {
    std::string out;
    for (const TranscriptMessage& msg : transcript.messages) {
        ordered_json j;
        j["step"] = msg.step;
        j["direction"] = msg.direction;
        j["kind"] = msg.kind;
        j["payload"] = ordered_json::parse(msg.payload);
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::vector<std::uint8_t> xor_with_key(const std::vector<std::uint8_t>& payload,
                                       const KeyMaterial& key) {
    if (key.bits.empty()) throw std::invalid_argument("xor_with_key: empty key");
    std::vector<std::uint8_t> out(payload.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < payload.size(); ++i) {
        std::uint8_t mask = 0;
        for (int bit = 7; bit >= 0; --bit) {
            mask |= static_cast<std::uint8_t>((key.bits[k] & 1) << bit);
            k = (k + 1) % key.bits.size();
        }
        out[i] = payload[i] ^ mask;
    }
    return out;
}

}  // namespace qmb
