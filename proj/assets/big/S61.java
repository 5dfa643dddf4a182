class S61 extends Abstract20 {
  void enter() {
    new S79();
    if (x0 > 0) {
      new Helper();
      new Helper();
    } else {
      send("msg15");
      send("msg14");
    }
    send("msg1");
    new S60();
  }
  void exit() {
    if (x6 > 0) {
      send("msg9");
      try {
        try {
          new S34();
          new S11();
          new State();
          send("msg18");
        } catch (IOException e) {
          send("msg18");
          send("msg12");
          send("msg16");
          new S9();
        } finally {
          new State();
          new S63();
          new S24();
          new S77();
        }
        send("msg0");
        new S34();
        new S89();
      } catch (TimeoutException e) {
        try {
          new S92();
          new S35();
          new S90();
          new S54();
        } catch (TimeoutException e) {
          new S8();
          send("msg6");
          send("msg19");
        } catch (IllegalStateException e) {
          new S46();
        }
      } finally {
        send("msg5");
        try {
          new S58();
          send("msg19");
        } catch (IOException e) {
          send("msg8");
          send("msg12");
          send("msg13");
        }
        new S64();
      }
      send("msg4");
    }
    new S38();
  }
  void handle() {
    try {
      new S17();
      switch (event) {
        case EV1836:
          try {
            send("msg16");
          } catch (IllegalStateException e) {
            send("msg8");
          }
          new S48();
          new S17();
          log("note");
          break;
        case EV1837:
          new S6();
          new S76();
          break;
        case EV1838:
          new Helper();
          break;
      }
      if (x1 > 0) {
        if (x4 > 0) {
          send("msg11");
          send("msg9");
          new S68();
        } else {
          send("msg17");
          send("msg15");
        }
        try {
          new S4();
          send("msg15");
          new S37();
          new S14();
        } catch (IOException e) {
          new S13();
          log("note");
          new S61();
          new S38();
        }
      } else {
        send("msg4");
        new S17();
        new S63();
      }
    } catch (IOException e) {
      new S43();
      new S73();
      new S69();
    } finally {
      new S31();
      try {
        new State();
        send("msg6");
        new S69();
      } catch (IllegalStateException e) {
        send("msg12");
        try {
          new S90();
          new S74();
          new Helper();
          new S32();
        } catch (IOException e) {
          log("note");
        } catch (TimeoutException e) {
          new S59();
          send("msg10");
          log("note");
        }
      }
      send("msg1");
      if (x0 > 0) {
        new S44();
        send("msg16");
        new S47();
      }
    }
    send("msg15");
    try {
      send("msg7");
      new Helper();
      send("msg17");
    } catch (TimeoutException e) {
      send("msg10");
      if (x8 > 0) {
        switch (event) {
          case EV1839:
            send("msg6");
            break;
          case EV1840:
            send("msg3");
            new S67();
            send("msg10");
            break;
        }
        new S67();
        new Helper();
      } else {
        new State();
        send("msg9");
      }
      new S2();
    } catch (TimeoutException e) {
      send("msg6");
    }
    try {
      log("note");
      new S24();
    } catch (IllegalStateException e) {
      new S27();
      new S82();
      new S47();
      try {
        new S7();
      } catch (IOException e) {
        try {
          new S35();
          new S24();
        } catch (IOException e) {
          send("msg13");
          new S37();
        }
        send("msg7");
        new S38();
      } catch (IllegalStateException e) {
        new S95();
        new S66();
        if (x4 > 0) {
          send("msg19");
        } else {
          send("msg12");
          new S40();
        }
      }
    } finally {
      send("msg2");
      log("note");
      log("note");
      send("msg12");
    }
  }
  void tick() {
    new Helper();
    new S25();
    try {
      new S46();
      new S90();
    } catch (IllegalStateException e) {
      new S94();
      switch (event) {
        case EV1841:
          new S30();
          new S86();
          if (x5 > 0) {
            send("msg19");
            new S8();
          }
          break;
        case EV1842:
          if (x0 > 0) {
            send("msg10");
            new S30();
            send("msg15");
            log("note");
          } else {
            new S30();
          }
          new S10();
          log("note");
          new Helper();
          break;
        case EV1843:
          new S16();
          new S44();
          send("msg16");
          new S35();
          break;
      }
      new S10();
    } finally {
      send("msg13");
      send("msg2");
      if (x2 > 0) {
        try {
          new State();
          send("msg11");
        } catch (IllegalStateException e) {
          log("note");
          new S40();
          log("note");
          log("note");
        } catch (IOException e) {
          new S10();
        }
        try {
          new S6();
          new S5();
          send("msg16");
          log("note");
        } catch (TimeoutException e) {
          new S36();
          send("msg0");
          send("msg15");
        } catch (IOException e) {
          send("msg7");
          log("note");
          new S55();
        }
      }
      new S10();
    }
  }
  void reset() {
    log("note");
    send("msg4");
    new S86();
  }
  public void open() {
    new S45();
    send("msg13");
  }
  public void close() {
    new S38();
    new S100();
    send("msg13");
    try {
      new Helper();
      send("msg15");
      new S31();
    } catch (IOException e) {
      new S17();
      switch (event) {
        case EV1844:
          try {
            new S50();
            log("note");
            new Helper();
            send("msg13");
          } catch (TimeoutException e) {
            new Helper();
            send("msg2");
            new S30();
            send("msg17");
          } catch (IllegalStateException e) {
            new S7();
            new S10();
          }
          switch (event) {
            case EV1845:
              new S46();
              new Helper();
              break;
            case EV1846:
              new S60();
              new S19();
              new State();
              break;
            case EV1847:
              new S17();
              new S7();
              log("note");
              break;
          }
          new S49();
          try {
            log("note");
            send("msg10");
            new S35();
          } catch (IllegalStateException e) {
            new S2();
            send("msg14");
            new S43();
            new S86();
          }
          break;
      }
      new S12();
    }
  }
  void start() {
    switch (event) {
      case EV1848:
        log("note");
        break;
      case EV1849:
        new S75();
        new S3();
        try {
          try {
            new S63();
            new S33();
          } catch (IOException e) {
            new S89();
            new S7();
          } catch (IOException e) {
            send("msg15");
          }
        } catch (IllegalStateException e) {
          new S51();
          new S26();
          new S32();
          switch (event) {
            case EV1850:
              new S88();
              send("msg2");
              new Helper();
              new S54();
              break;
            case EV1851:
              new Helper();
              new S30();
              break;
            case EV1852:
              new S7();
              send("msg4");
              new S98();
              send("msg7");
              break;
          }
        } catch (IllegalStateException e) {
          send("msg1");
          try {
            log("note");
            new S36();
            new S56();
          } finally {
            send("msg19");
            new S68();
            new S61();
            send("msg14");
          }
          try {
            send("msg3");
            new S70();
            send("msg15");
            new S100();
          } catch (IllegalStateException e) {
            log("note");
            log("note");
          } finally {
            send("msg4");
          }
          send("msg4");
        }
        send("msg17");
        break;
    }
    new S60();
  }
  void stop() {
    switch (event) {
      case EV1853:
        new S85();
        send("msg5");
        new S81();
        break;
    }
  }
  void pause() {
    send("msg16");
    send("msg8");
  }
}
