# -*- coding: utf-8 -*-
# polyvis
# Copyright (C) 2025 The polyvis authors
#
# polyvis is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# polyvis is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""File based result cache

One JSON file per entry, named after the SHA-256 of its key, plus a
plain-text ``index.txt`` with one ``key<TAB>hash`` line per entry so the
directory stays human-debuggable. The index is regenerated from the entry
files on every write and never read back. All writes go to a temporary
file first and are moved into place with ``os.replace``.
"""

import datetime
import hashlib
import json
import os
import tempfile

FORMAT_VERSION = 1
INDEX_NAME = "index.txt"


class ResultCache:
    """Cache of computed payloads keyed by command and canonical input.
    """
    def __init__(self, log, cache_dir):
        """Initialize a ResultCache object

        Args:
            log (logger object): an already initialized logger object
            cache_dir (string): directory holding the entries; created on
                first write
        """
        self.log = log
        self.cache_dir = os.path.expanduser(cache_dir)

    @staticmethod
    def make_key(command, canonical, params):
        """Build a cache key.

        Args:
            command (string): CLI command name, e.g. "visible"
            canonical (string): canonical polynomial string
            params (dict): remaining parameters; order does not matter

        Returns:
            string: e.g. ``visible|x^2|N=100``
        """
        rendered = ",".join(f"{name}={params[name]}"
                            for name in sorted(params))
        return f"{command}|{canonical}|{rendered}"

    @staticmethod
    def digest(key):
        return hashlib.sha256(key.encode("utf-8")).hexdigest()

    def _path(self, name):
        return os.path.join(self.cache_dir, name)

    def _write_atomic(self, name, text):
        os.makedirs(self.cache_dir, exist_ok=True)
        handle, tmp_path = tempfile.mkstemp(dir=self.cache_dir,
                                            prefix=".tmp-")
        try:
            with os.fdopen(handle, "w", encoding="utf-8") as tmp:
                tmp.write(text)
            os.replace(tmp_path, self._path(name))
        except BaseException:
            if os.path.exists(tmp_path):
                os.unlink(tmp_path)
            raise

    def get(self, key):
        """Return the cached payload for key, or None on a miss.

        Unreadable or mismatching entries count as misses.
        """
        path = self._path(self.digest(key) + ".json")
        try:
            with open(path, encoding="utf-8") as handle:
                entry = json.load(handle)
        except FileNotFoundError:
            self.log.debug("Cache miss: %s", key)
            return None
        except Exception as error:
            self.log.error("%s while reading cache entry %s: %s",
                           type(error).__name__, path, error)
            return None
        if entry.get("version") != FORMAT_VERSION or entry.get("key") != key:
            self.log.warning("Ignoring stale cache entry %s", path)
            return None
        self.log.info("Cache hit: %s", key)
        return entry["payload"]

    def put(self, key, payload):
        """Store payload under key; returns False if the write failed."""
        digest = self.digest(key)
        entry = {
            "version": FORMAT_VERSION,
            "key": key,
            "created": datetime.datetime.now().strftime("%Y-%m-%d %H:%M:%S"),
            "payload": payload,
        }
        try:
            self._write_atomic(digest + ".json", json.dumps(entry, indent=1))
            index = self.entries()
            self._write_atomic(INDEX_NAME, "".join(
                f"{k}\t{v}\n" for k, v in sorted(index.items())))
        except Exception as error:
            self.log.error("%s while writing cache entry for %s: %s",
                           type(error).__name__, key, error)
            return False
        self.log.debug("Cached %s as %s", key, digest)
        return True

    def entries(self):
        """Mapping of cached keys to their file hashes.

        Rebuilt from the entry files themselves, so a lost or stale
        ``index.txt`` never hides an entry. Unreadable files are skipped.
        """
        index = {}
        if not os.path.isdir(self.cache_dir):
            return index
        for name in sorted(os.listdir(self.cache_dir)):
            digest, ext = os.path.splitext(name)
            if ext != ".json":
                continue
            try:
                with open(self._path(name), encoding="utf-8") as handle:
                    entry = json.load(handle)
            except Exception as error:
                self.log.debug("Skipping cache file %s: %s", name, error)
                continue
            key = entry.get("key") if isinstance(entry, dict) else None
            if (isinstance(key, str) and self.digest(key) == digest
                    and entry.get("version") == FORMAT_VERSION):
                index[key] = digest
        return index

    def clear(self):
        """Remove all entries and the index; returns the number removed."""
        removed = 0
        if not os.path.isdir(self.cache_dir):
            return removed
        for name in os.listdir(self.cache_dir):
            if name.endswith(".json") or name == INDEX_NAME:
                os.unlink(self._path(name))
                removed += name.endswith(".json")
        self.log.info("Removed %d cache entries from %s", removed,
                      self.cache_dir)
        return removed
