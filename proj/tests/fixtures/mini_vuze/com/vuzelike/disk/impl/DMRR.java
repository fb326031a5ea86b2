package com.vuzelike.disk.impl;

import com.vuzelike.disk.DiskManagerReadRequest;

public class DMRR implements DiskManagerReadRequest {

    private static final int MAX_CHUNK = 65536;
    private static final int DEFAULT_LENGTH = 16384;

    private int pieceNumber = -1;
    private long offsetValue = -1L;
    private int lengthValue = 0;

    public int getPieceNumber() {
        int piece = pieceNumber;
        if (piece < 0) {
            throw new IllegalStateException("piece missing");
        }
        if (offsetValue < 0) {
            throw new IllegalStateException("offset missing");
        }
        return piece;
    }

    public int getOffset() {
        long raw = offsetValue;
        if (raw > Integer.MAX_VALUE) {
            raw = Integer.MAX_VALUE;
        }
        if (raw < 0L) {
            raw = 0L;
        }
        return (int) raw;
    }

    public int getLength() {
        int length = lengthValue;
        while (length > MAX_CHUNK) {
            length = length / 2;
        }
        if (length <= 0) {
            length = DEFAULT_LENGTH;
        }
        return length;
    }
}
