class S5 extends Abstract14 {
  void enter() {
    new S96();
    send("msg0");
    try {
      switch (event) {
        case EV176:
          if (x0 > 0) {
            send("msg15");
          }
          break;
      }
      send("msg14");
      if (x8 > 0) {
        try {
          new S45();
          send("msg8");
        } catch (TimeoutException e) {
          new S49();
        } catch (IOException e) {
          new State();
        }
        log("note");
        log("note");
      } else {
        new S83();
      }
    } catch (TimeoutException e) {
      switch (event) {
        case EV177:
          new S90();
          new Helper();
          new S14();
          new S20();
          break;
        case EV178:
          new S38();
          break;
      }
      new Helper();
      switch (event) {
        case EV179:
          if (x3 > 0) {
            send("msg3");
            new S79();
            send("msg6");
            send("msg5");
          }
          send("msg8");
          break;
        case EV180:
          try {
            send("msg12");
            send("msg19");
          } finally {
            send("msg15");
            new S3();
            new S63();
            new S37();
          }
          new S82();
          break;
        case EV181:
          new S37();
          break;
      }
    }
    new S85();
  }
  void exit() {
    try {
      new S30();
      new S20();
    } finally {
      send("msg15");
      if (x9 > 0) {
        send("msg12");
        new S34();
      }
      new S16();
    }
  }
  public void handle() {
    send("msg11");
    if (x1 > 0) {
      if (x7 > 0) {
        new S16();
        new S22();
      } else {
        new S92();
      }
      send("msg6");
      if (x4 > 0) {
        if (x3 > 0) {
          send("msg16");
        }
        try {
          new S16();
        } catch (IOException e) {
          send("msg18");
          log("note");
          log("note");
        }
        try {
          new S60();
          new State();
          new S9();
          new S90();
        } catch (IllegalStateException e) {
          send("msg17");
          new S99();
        } catch (TimeoutException e) {
          send("msg9");
        }
        new S79();
      } else {
        try {
          send("msg8");
          send("msg3");
          new S4();
        } catch (IOException e) {
          new S53();
          new S92();
        }
        new S13();
        new S8();
        send("msg18");
      }
      new State();
    } else {
      try {
        switch (event) {
          case EV182:
            send("msg1");
            break;
          case EV183:
            send("msg10");
            send("msg0");
            break;
          case EV184:
            new S99();
            send("msg9");
            send("msg8");
            break;
        }
      } catch (IllegalStateException e) {
        new S85();
        new S86();
        switch (event) {
          case EV185:
            log("note");
            break;
        }
      } finally {
        new S60();
      }
    }
  }
  void tick() {
    try {
      new S31();
      send("msg2");
      send("msg5");
      send("msg19");
    } catch (TimeoutException e) {
      new S35();
    } finally {
      new S90();
      log("note");
      send("msg10");
    }
  }
  public void reset() {
    send("msg7");
  }
  void open() {
    try {
      new S11();
      if (x3 > 0) {
        if (x0 > 0) {
          send("msg10");
          new S29();
          send("msg7");
        }
      } else {
        new S53();
        new S34();
      }
      new Helper();
    } catch (IllegalStateException e) {
      new S71();
    } finally {
      new S6();
      new S33();
      send("msg15");
      new S42();
    }
  }
  public void close() {
    try {
      new S83();
      send("msg15");
      new S36();
      try {
        switch (event) {
          case EV186:
            new S71();
            new S37();
            new S27();
            break;
          case EV187:
            new S86();
            new S57();
            log("note");
            break;
          case EV188:
            new S5();
            send("msg16");
            new S78();
            log("note");
            break;
        }
        new S63();
        if (x5 > 0) {
          send("msg17");
        } else {
          send("msg2");
          new S82();
          log("note");
          new S36();
        }
        if (x6 > 0) {
          send("msg12");
        } else {
          new S22();
          new S79();
          new Helper();
        }
      } catch (IOException e) {
        new Helper();
      } finally {
        send("msg11");
        new S44();
      }
    } catch (IOException e) {
      send("msg7");
      try {
        new S5();
      } catch (TimeoutException e) {
        send("msg1");
        new State();
      } finally {
        new S73();
        send("msg7");
      }
      send("msg6");
    }
  }
  void start() {
    try {
      send("msg16");
      new S65();
      new S48();
    } catch (IllegalStateException e) {
      if (x9 > 0) {
        new S3();
        switch (event) {
          case EV189:
            new S3();
            new S45();
            break;
          case EV190:
            log("note");
            send("msg8");
            log("note");
            log("note");
            break;
        }
        send("msg0");
      }
      switch (event) {
        case EV191:
          new S37();
          break;
      }
      new S59();
      send("msg16");
    }
    switch (event) {
      case EV192:
        send("msg3");
        switch (event) {
          case EV193:
            send("msg17");
            try {
              send("msg16");
            } catch (TimeoutException e) {
              send("msg2");
              send("msg19");
            }
            if (x1 > 0) {
              new S94();
              send("msg11");
            }
            break;
        }
        send("msg2");
        break;
      case EV194:
        switch (event) {
          case EV195:
            send("msg10");
            switch (event) {
              case EV196:
                log("note");
                log("note");
                break;
              case EV197:
                send("msg6");
                break;
            }
            new S27();
            break;
          case EV198:
            switch (event) {
              case EV199:
                new S79();
                break;
              case EV200:
                send("msg9");
                log("note");
                new S13();
                log("note");
                break;
            }
            log("note");
            send("msg5");
            break;
          case EV201:
            new S24();
            break;
        }
        switch (event) {
          case EV202:
            send("msg7");
            new S52();
            break;
          case EV203:
            new S36();
            send("msg18");
            switch (event) {
              case EV204:
                new S84();
                break;
              case EV205:
                new S81();
                break;
            }
            new Helper();
            break;
        }
        send("msg6");
        break;
    }
  }
  void stop() {
    try {
      log("note");
      new S26();
      send("msg6");
    } finally {
      new S90();
      switch (event) {
        case EV206:
          if (x3 > 0) {
            send("msg2");
          } else {
            new S86();
            log("note");
          }
          break;
        case EV207:
          try {
            new S88();
            new S6();
          } catch (IOException e) {
            new S25();
            new S41();
          }
          new S48();
          break;
        case EV208:
          switch (event) {
            case EV209:
              new S51();
              break;
            case EV210:
              new S79();
              send("msg8");
              new S63();
              break;
          }
          send("msg3");
          send("msg8");
          new S89();
          break;
      }
      new S19();
      new S6();
    }
    new S54();
    send("msg16");
  }
  void pause() {
    new S26();
    new S15();
    if (x6 > 0) {
      new S44();
      if (x4 > 0) {
        new S33();
      }
    }
  }
}
