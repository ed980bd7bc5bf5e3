#include "kerbwsn/base_station.hpp"

namespace kerbwsn {

BaseStation::BaseStation(Principal service, NetAddress addr, SecretKey service_key,
                         bool auth_enabled, Tick max_clock_skew, EnergyParams energy_params,
                         const Topology* net, std::uint32_t reading_packet_bytes)
    : service_(std::move(service)),
      addr_(addr),
      service_key_(service_key),
      auth_enabled_(auth_enabled),
      max_clock_skew_(max_clock_skew),
      energy_params_(energy_params),
      energy_(energy_params.initial_energy),
      net_(net),
      reading_packet_bytes_(reading_packet_bytes) {}

Result<Ticket> BaseStation::verify(const ApRequest& req, NetAddress source_addr, Tick now) {
    auto opened_ticket = open_sealed(req.service_ticket, service_key_);
    if (!opened_ticket) return ErrorKind::IntegrityFailure;
    auto decoded_ticket = decode_ticket(opened_ticket.value());
    if (!decoded_ticket) return ErrorKind::IntegrityFailure;
    const Ticket& ticket = decoded_ticket.value();

    if (ticket.service != service_) return ErrorKind::IntegrityFailure;
    if (!ticket.valid_at(now)) return ErrorKind::ExpiredTicket;

    auto opened_auth = open_sealed(req.authenticator, ticket.session_key);
    if (!opened_auth) return ErrorKind::IntegrityFailure;
    auto decoded_auth = decode_authenticator(opened_auth.value());
    if (!decoded_auth) return ErrorKind::IntegrityFailure;
    const Authenticator& auth = decoded_auth.value();

    if (auth.client != ticket.client || req.user != ticket.client) {
        return ErrorKind::IntegrityFailure;
    }
    if (source_addr != ticket.client_addr || auth.client_addr != ticket.client_addr) {
        return ErrorKind::AddressMismatch;
    }

    Tick delta = auth.timestamp > now ? auth.timestamp - now : now - auth.timestamp;
    if (delta > max_clock_skew_) return ErrorKind::StaleAuthenticator;

    if (replay_cache_.seen(ReplayCache::Context::Ap, auth.client, auth.client_addr,
                           auth.timestamp)) {
        return ErrorKind::ReplayDetected;
    }
    replay_cache_.record(ReplayCache::Context::Ap, auth.client, auth.client_addr,
                         auth.timestamp, now, max_clock_skew_);
    return ticket;
}

Result<SensorResponse> BaseStation::handle_request(const ApRequest& req, NetAddress source_addr,
                                                   Tick now) {
    if (!auth_enabled_) {
        // Layer off: anything is served, no verification work done.
        return serve_query(req.query, now);
    }
    energy_.charge(energy_params_.verify_cost);
    auto verified = verify(req, source_addr, now);
    if (!verified) return verified.error();
    return serve_query(req.query, now);
}

Result<SensorResponse> BaseStation::handle_request(const RawQuery& req, NetAddress source_addr,
                                                   Tick now) {
    (void)source_addr;
    (void)now;
    if (auth_enabled_) {
        // No credential at all: the check work is done (and charged), the
        // response transmission is not.
        energy_.charge(energy_params_.verify_cost);
        return ErrorKind::IntegrityFailure;
    }
    return serve_query(req.query, now);
}

Result<SensorResponse> BaseStation::serve_query(const SensorQuery& query, Tick now) {
    (void)query;
    (void)now;
    if (net_ == nullptr || net_->nodes.empty()) return ErrorKind::EmptyNetwork;
    CollectionRound round = many_to_one_round(*net_, reading_packet_bytes_);
    SensorResponse response;
    response.readings = round.delivered;
    energy_.charge(tx_cost(energy_params_, response_bytes(response)));
    return response;
}

Bytes BaseStation::handle_wire(ByteView request, NetAddress source_addr, Tick now) {
    auto tag = peek_tag(request);
    if (!tag) return encode(ErrorReply{tag.error()});

    switch (tag.value()) {
        case WireTag::ApRequest: {
            auto req = decode_ap_request(request);
            if (!req) return encode(ErrorReply{req.error()});
            auto response = handle_request(req.value(), source_addr, now);
            if (!response) return encode(ErrorReply{response.error()});
            return encode(response.value());
        }
        case WireTag::RawQuery: {
            auto req = decode_raw_query(request);
            if (!req) return encode(ErrorReply{req.error()});
            auto response = handle_request(req.value(), source_addr, now);
            if (!response) return encode(ErrorReply{response.error()});
            return encode(response.value());
        }
        default:
            return encode(ErrorReply{ErrorKind::WrongType});
    }
}

} // namespace kerbwsn
