#include "kerbwsn/network.hpp"

namespace kerbwsn {

Bytes Network::send_to_kdc(const std::string& realm, ByteView request, NetAddress source,
                           Tick now, Rng& rng) {
    std::string destination = "kdc/" + realm;
    log_.log(source, destination, Bytes(request.begin(), request.end()));
    Kdc* kdc = kdc_for(realm);
    Bytes reply = kdc == nullptr ? encode(ErrorReply{ErrorKind::UnknownRealm})
                                 : kdc->handle_wire(request, source, now, rng);
    log_.log(kKdcAddress, destination + "/reply", reply);
    return reply;
}

Bytes Network::send_to_station(const Principal& service, ByteView request, NetAddress source,
                               Tick now) {
    std::string destination = "bs/" + service.name + "@" + service.realm;
    log_.log(source, destination, Bytes(request.begin(), request.end()));
    BaseStation* station = station_for(service);
    NetAddress reply_source = station == nullptr ? NetAddress{0} : station->addr();
    Bytes reply = station == nullptr ? encode(ErrorReply{ErrorKind::UnknownService})
                                     : station->handle_wire(request, source, now);
    log_.log(reply_source, destination + "/reply", reply);
    return reply;
}

} // namespace kerbwsn
