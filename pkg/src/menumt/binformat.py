"""Seekable binary phrase-table format for on-demand lookup.

Layout (all integers little-endian):

    magic "MLPT1"
    u32 meta_len, meta JSON (origin/topic/max_n)
    u32 n_groups
    n_groups * u64   -- file offset of each group record, sorted by key
    group records:   u32 key_len, key bytes (source phrase, space-joined),
                     u32 n_entries, then per entry
                     u32 target_len, target bytes, f64 weight
    u32 CRC32 over everything before it

A lookup binary-searches the offset index, reading only the keys it
touches and the matching record. The checksum is verified once when a
handle is opened.
"""

from __future__ import annotations

import json
import mmap
import os
import struct
import zlib

from .phrasetable import PhraseTable, PhraseTableEntry

MAGIC = b"MLPT1"

_U32 = struct.Struct("<I")
_U64 = struct.Struct("<Q")
_F64 = struct.Struct("<d")


class BinaryFormatError(ValueError):
    pass


def serialize_binary(table):
    """Serialize a PhraseTable to the on-demand byte format."""
    meta = json.dumps({"origin": table.origin, "topic": table.topic,
                       "max_n": table.max_n}, sort_keys=True).encode()
    groups = []
    for source in table.sources():
        key = " ".join(source).encode()
        body = [_U32.pack(len(key)), key]
        entries = table.lookup(source)
        body.append(_U32.pack(len(entries)))
        for entry in entries:
            target = " ".join(entry.target).encode()
            body.append(_U32.pack(len(target)))
            body.append(target)
            body.append(_F64.pack(entry.weight))
        groups.append((key, b"".join(body)))
    groups.sort(key=lambda g: g[0])

    header = b"".join([MAGIC, _U32.pack(len(meta)), meta, _U32.pack(len(groups))])
    index_size = len(groups) * _U64.size
    offset = len(header) + index_size
    index = []
    for _, record in groups:
        index.append(_U64.pack(offset))
        offset += len(record)
    payload = b"".join([header, *index, *(record for _, record in groups)])
    return payload + _U32.pack(zlib.crc32(payload))


class BinaryTableHandle:
    """Read-only view over serialized bytes; lookups seek, never scan."""

    def __init__(self, data):
        if len(data) < len(MAGIC) + 3 * _U32.size:
            raise BinaryFormatError("truncated table")
        if bytes(data[:len(MAGIC)]) != MAGIC:
            raise BinaryFormatError("bad magic")
        (stored,) = _U32.unpack(data[-_U32.size:])
        if zlib.crc32(data[:-_U32.size]) != stored:
            raise BinaryFormatError("checksum mismatch")
        self._data = data
        pos = len(MAGIC)
        (meta_len,) = _U32.unpack(data[pos:pos + _U32.size])
        pos += _U32.size
        self.meta = json.loads(bytes(data[pos:pos + meta_len]).decode())
        pos += meta_len
        (self._n_groups,) = _U32.unpack(data[pos:pos + _U32.size])
        self._index_start = pos + _U32.size

    @property
    def max_n(self):
        return self.meta["max_n"]

    @property
    def origin(self):
        return self.meta["origin"]

    def _group_offset(self, i):
        pos = self._index_start + i * _U64.size
        return _U64.unpack(self._data[pos:pos + _U64.size])[0]

    def _key_at(self, i):
        pos = self._group_offset(i)
        (key_len,) = _U32.unpack(self._data[pos:pos + _U32.size])
        pos += _U32.size
        return bytes(self._data[pos:pos + key_len]), pos + key_len

    def lookup(self, source_phrase):
        """Entries for one source phrase; unknown phrases yield []."""
        source = tuple(source_phrase)
        wanted = " ".join(source).encode()
        lo, hi = 0, self._n_groups
        while lo < hi:
            mid = (lo + hi) // 2
            key, after = self._key_at(mid)
            if key == wanted:
                return self._read_entries(source, after)
            if key < wanted:
                lo = mid + 1
            else:
                hi = mid
        return []

    def _read_entries(self, source, pos):
        data = self._data
        (count,) = _U32.unpack(data[pos:pos + _U32.size])
        pos += _U32.size
        entries = []
        for _ in range(count):
            (tlen,) = _U32.unpack(data[pos:pos + _U32.size])
            pos += _U32.size
            target = tuple(bytes(data[pos:pos + tlen]).decode().split())
            pos += tlen
            (weight,) = _F64.unpack(data[pos:pos + _F64.size])
            pos += _F64.size
            entries.append(PhraseTableEntry(source, target, weight))
        return entries

    def sources(self):
        return [tuple(self._key_at(i)[0].decode().split())
                for i in range(self._n_groups)]


def open_ondemand(data):
    """Open serialized bytes, a file path, or anything buffer-like."""
    if isinstance(data, (str, os.PathLike)):
        with open(data, "rb") as fh:
            mapped = mmap.mmap(fh.fileno(), 0, access=mmap.ACCESS_READ)
        return BinaryTableHandle(mapped)
    return BinaryTableHandle(data)


def load_full(data):
    """Eagerly parse the whole byte image back into a PhraseTable."""
    handle = open_ondemand(data)
    entries = []
    for source in handle.sources():
        entries.extend(handle.lookup(source))
    return PhraseTable(entries, handle.meta["origin"], topic=handle.meta["topic"],
                       max_n=handle.meta["max_n"])
