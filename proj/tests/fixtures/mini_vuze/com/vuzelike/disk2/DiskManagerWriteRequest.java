package com.vuzelike.disk2;

public interface DiskManagerWriteRequest {

    int getPieceNumber();

    int getOffset();

    int getLength();

    Object getData();
}
